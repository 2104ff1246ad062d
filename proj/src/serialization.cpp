#include "sea/serialization.hpp"

#include <sstream>

#include "sea/errors.hpp"

namespace sea {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer())
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

template <class T>
T parse_as(const json& j) {
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

}  // namespace

void to_json(json& j, const BigRational& r) { j = r.to_string(); }

void from_json(const json& j, BigRational& r) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, "rational must be a JSON string");
  r = BigRational::parse(j.get<std::string>());
}

void to_json(json& j, const LaurentPoly& p) {
  j = json::object();
  for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = c.to_string();
}

void from_json(const json& j, LaurentPoly& p) {
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "LaurentPoly must be a JSON object");
  p = LaurentPoly();
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    int e = 0;
    try {
      e = std::stoi(key, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad exponent key '" + key + "'");
    }
    if (used != key.size()) throw Error(ErrorCode::ParseError, "bad exponent key '" + key + "'");
    p.add_to(e, value.get<BigRational>());
  }
}

void to_json(json& j, const LeadingSuperpotential& w) {
  j = json{{"pole", w.pole}, {"constant", w.constant}, {"linear", w.linear}, {"energy", w.energy}};
}

void from_json(const json& j, LeadingSuperpotential& w) {
  w.pole = field(j, "pole").get<BigRational>();
  w.constant = field(j, "constant").get<BigRational>();
  w.linear = field(j, "linear").get<BigRational>();
  w.energy = field(j, "energy").get<BigRational>();
}

json family_to_json(const ProblemFamily& family) {
  return std::visit(
      [](const auto& f) -> json {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, Hulthen>) {
          return json{{"name", "hulthen"}, {"l", f.l}};
        } else if constexpr (std::is_same_v<T, Anharmonic>) {
          return json{{"name", "anharmonic"}};
        } else {
          json j{{"name", "generic"}, {"leading", f.leading}, {"perturbation", f.perturbation}};
          if (f.base_potential) j["base_potential"] = *f.base_potential;
          return j;
        }
      },
      family);
}

ProblemFamily family_from_json(const json& j) {
  const json& name = field(j, "name");
  if (!name.is_string()) throw Error(ErrorCode::ParseError, "family name must be a string");
  const std::string n = name.get<std::string>();
  if (n == "hulthen") return Hulthen{int_field(j, "l")};
  if (n == "anharmonic") return Anharmonic{};
  if (n == "generic") {
    GenericPerturbed g;
    g.leading = field(j, "leading").get<LeadingSuperpotential>();
    g.perturbation = field(j, "perturbation").get<LaurentPoly>();
    if (j.contains("base_potential")) g.base_potential = j.at("base_potential").get<LaurentPoly>();
    return g;
  }
  throw Error(ErrorCode::InvalidFamily, "unknown family '" + n + "'");
}

json chain_to_json(const ChainSolution& chain) {
  json rungs = json::array();
  for (const Rung& rung : chain.rungs())
    rungs.push_back(json{{"r", rung.r},
                         {"energy", rung.energy.coeffs()},
                         {"superpotential", rung.superpotential.coeffs()}});
  return json{{"family", family_to_json(chain.family())},
              {"b", chain.b()},
              {"rMax", chain.r_max()},
              {"K", chain.order()},
              {"rungs", std::move(rungs)}};
}

ChainSolution chain_from_json(const json& j) {
  const ProblemFamily family = family_from_json(field(j, "family"));
  validate_family(family);
  const int r_max = int_field(j, "rMax");
  const int order = int_field(j, "K");
  if (int_field(j, "b") != family_b(family))
    throw Error(ErrorCode::ParseError, "b does not match the family");
  ChainSolution chain(family, r_max, order);
  const json& rungs = field(j, "rungs");
  if (!rungs.is_array()) throw Error(ErrorCode::ParseError, "rungs must be an array");
  for (const json& rj : rungs) {
    Rung rung;
    rung.r = int_field(rj, "r");
    const auto energy = parse_as<std::vector<BigRational>>(field(rj, "energy"));
    const auto w = parse_as<std::vector<LaurentPoly>>(field(rj, "superpotential"));
    if (static_cast<int>(energy.size()) != order + 1 || static_cast<int>(w.size()) != order + 1)
      throw Error(ErrorCode::ParseError, "rung " + std::to_string(rung.r) + " has wrong length");
    rung.leading = solve_leading(family, rung.r);
    if (w[0] != rung.leading.polynomial() || energy[0] != rung.leading.energy)
      throw Error(ErrorCode::InvalidLeading, "stored leading term does not match the family");
    chain.start_rung(std::move(rung));
    const int r = chain.rungs_started() - 1;
    for (int k = 0; k <= order; ++k)
      chain.append_order(r, w[static_cast<std::size_t>(k)], energy[static_cast<std::size_t>(k)],
                         potential_coefficient(chain, r, k));
    const Rung& done = chain.rung(r);
    const auto residuals = riccati_residual(done.superpotential, done.potential, done.energy, order);
    for (const auto& res : residuals)
      if (!res.is_zero())
        throw Error(ErrorCode::ResidualNonzero, "stored rung " + std::to_string(r) +
                                                    " does not satisfy the Riccati identity");
  }
  return chain;
}

json energy_series_to_json(const EnergySeries& series) {
  json j{{"family", series.family}, {"K", series.order()}, {"coeffs", series.coeffs.coeffs()}};
  if (series.family == "hulthen") {
    j["n"] = series.n;
    j["l"] = series.l;
  } else {
    j["r"] = series.r;
  }
  return j;
}

EnergySeries energy_series_from_json(const json& j) {
  EnergySeries s;
  s.family = parse_as<std::string>(field(j, "family"));
  if (s.family == "hulthen") {
    s.n = int_field(j, "n");
    s.l = int_field(j, "l");
    s.r = s.n - 1 - s.l;
  } else {
    s.r = int_field(j, "r");
  }
  s.coeffs = ScalarSeries(parse_as<std::vector<BigRational>>(field(j, "coeffs")));
  if (s.order() != int_field(j, "K"))
    throw Error(ErrorCode::ParseError, "K does not match the number of coefficients");
  return s;
}

std::string energy_series_to_csv(const EnergySeries& series) {
  std::ostringstream out;
  out << "k,coefficient,exact\n";
  for (int k = 0; k <= series.order(); ++k)
    out << k << "," << series.coeffs[static_cast<std::size_t>(k)].to_decimal(30) << ","
        << series.coeffs[static_cast<std::size_t>(k)].to_string() << "\n";
  return out.str();
}

json pade_to_json(const PadeApproximant& p) {
  return json{{"m", p.m}, {"n", p.n}, {"numerator", p.numerator}, {"denominator", p.denominator}};
}

}  // namespace sea
