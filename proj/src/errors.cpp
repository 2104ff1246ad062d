#include "sea/errors.hpp"

namespace sea {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonIntegrableTerm: return "NonIntegrableTerm";
    case ErrorCode::OrderExceeded: return "OrderExceeded";
    case ErrorCode::ChainIncomplete: return "ChainIncomplete";
    case ErrorCode::InvalidLeading: return "InvalidLeading";
    case ErrorCode::InvalidFamily: return "InvalidFamily";
    case ErrorCode::UnsolvableOrder: return "UnsolvableOrder";
    case ErrorCode::ResidualNonzero: return "ResidualNonzero";
    case ErrorCode::OutOfBoundDomain: return "OutOfBoundDomain";
    case ErrorCode::RungOrderViolation: return "RungOrderViolation";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NonNormalizable: return "NonNormalizable";
    case ErrorCode::SingularPadeSystem: return "SingularPadeSystem";
    case ErrorCode::PoleProximity: return "PoleProximity";
    case ErrorCode::NoSignChange: return "NoSignChange";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace sea
