#pragma once

#include <ostream>

namespace sea::cli {

/// Entry point of the `sea` tool. Exit codes: 0 success, 1 validation
/// mismatch, 2 invalid parameters, 3 computation failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sea::cli
