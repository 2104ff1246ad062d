#pragma once

#include <string>

#include "json.hpp"
#include "sea/engine.hpp"
#include "sea/resummation.hpp"
#include "sea/spectra.hpp"

namespace sea {

using json = nlohmann::json;

void to_json(json& j, const BigRational& r);
void from_json(const json& j, BigRational& r);
void to_json(json& j, const LaurentPoly& p);
void from_json(const json& j, LaurentPoly& p);
void to_json(json& j, const LeadingSuperpotential& w);
void from_json(const json& j, LeadingSuperpotential& w);

json family_to_json(const ProblemFamily& family);
ProblemFamily family_from_json(const json& j);

/// {family, b, rMax, K, rungs: [{r, energy, superpotential}]}.
json chain_to_json(const ChainSolution& chain);
/// Rebuilds potentials and leading terms from the family and checks every
/// rung against the Riccati identity (ResidualNonzero on tampered input).
ChainSolution chain_from_json(const json& j);

json energy_series_to_json(const EnergySeries& series);
EnergySeries energy_series_from_json(const json& j);
/// Columns k, coefficient (30 significant digits), exact.
std::string energy_series_to_csv(const EnergySeries& series);

json pade_to_json(const PadeApproximant& p);

}  // namespace sea
