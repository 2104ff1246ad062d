#include "sea/states.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>

#include "sea/errors.hpp"

namespace sea {

namespace {

PolySeries truncated_product(const PolySeries& a, const PolySeries& b, int order) {
  PolySeries out(static_cast<std::size_t>(order));
  for (int k = 0; k <= order; ++k)
    for (int j = 0; j <= k; ++j)
      fused_multiply_add(out[static_cast<std::size_t>(k)], a[static_cast<std::size_t>(j)],
                         b[static_cast<std::size_t>(k - j)]);
  return out;
}

void check_rung(const ChainSolution& chain, int r) {
  if (r < 0 || r >= chain.rungs_started() || chain.rung(r).order() < chain.order())
    throw Error(ErrorCode::ChainIncomplete, "rung " + std::to_string(r) + " is not solved");
}

}  // namespace

PolySeries build_G(const ChainSolution& chain, int r) {
  check_rung(chain, r);
  const Rung& rung = chain.rung(r);
  PolySeries g(static_cast<std::size_t>(rung.order()));
  for (int k = 1; k <= rung.order(); ++k)
    g[static_cast<std::size_t>(k)] = rung.superpotential[static_cast<std::size_t>(k)].antiderivative();
  return g;
}

StateRep edge_state(const ChainSolution& chain, int r) {
  check_rung(chain, r);
  const Rung& rung = chain.rung(r);
  StateRep s;
  s.family = chain.family();
  s.base_rung = s.level = s.r = r;
  if (std::holds_alternative<Hulthen>(chain.family())) {
    s.l = chain.b() - 1;
    s.n = chain.b() + r;
  } else {
    s.n = r;
  }
  s.prefactor = PolySeries(static_cast<std::size_t>(chain.order()));
  s.prefactor[0] = LaurentPoly(BigRational(1));
  const BigRational power = -rung.leading.pole;
  if (!power.is_integer())
    throw Error(ErrorCode::InvalidLeading, "edge state needs an integer power of x");
  s.power = static_cast<int>(power.numerator().get_si());
  s.decay_linear = rung.leading.constant;
  s.decay_gauss = rung.leading.linear;
  s.G = build_G(chain, r);
  return s;
}

StateRep apply_creation(const StateRep& state, int q, const ChainSolution& chain) {
  if (q < 0 || q >= state.level)
    throw Error(ErrorCode::RungOrderViolation, "a_" + std::to_string(q) +
                                                   "^dagger cannot act on a state of rung " +
                                                   std::to_string(state.level));
  check_rung(chain, q);
  check_rung(chain, state.base_rung);
  const int order = state.order();
  const PolySeries w = series_sum(chain.rung(q).superpotential.truncated(order),
                                  chain.rung(state.base_rung).superpotential.truncated(order));
  PolySeries next = truncated_product(w, state.prefactor, order);
  for (int k = 0; k <= order; ++k)
    next[static_cast<std::size_t>(k)] -= state.prefactor[static_cast<std::size_t>(k)].derivative();
  StateRep out = state;
  out.prefactor = std::move(next);
  out.level = q;
  return out;
}

StateRep build_eigenstate(const ChainSolution& chain, int r) {
  StateRep s = edge_state(chain, r);
  for (int q = r - 1; q >= 0; --q) s = apply_creation(s, q, chain);
  return s;
}

StateRep build_hulthen_state(int n, int l, int order) {
  if (l < 0 || n < l + 1)
    throw Error(ErrorCode::InvalidFamily, "Hulthen state needs 0 <= l <= n-1");
  return build_eigenstate(solve_chain(Hulthen{l}, n - 1 - l, order), n - 1 - l);
}

StateRep build_anharmonic_state(int r, int order) {
  if (r < 0) throw Error(ErrorCode::InvalidFamily, "anharmonic state needs r >= 0");
  return build_eigenstate(solve_chain(Anharmonic{}, r, order), r);
}

std::vector<LaurentPoly> hamiltonian_residual(const StateRep& state, const ChainSolution& chain,
                                              int order) {
  check_rung(chain, state.base_rung);
  check_rung(chain, state.level);
  const Rung& base = chain.rung(state.base_rung);
  const Rung& host = chain.rung(state.level);
  const PolySeries w = base.superpotential.truncated(order);
  const PolySeries& rr = state.prefactor;
  const PolySeries w_sq = truncated_product(w, w, order);
  std::vector<LaurentPoly> out(static_cast<std::size_t>(order) + 1);
  for (int k = 0; k <= order; ++k) {
    LaurentPoly acc = -rr.at(k).derivative().derivative();
    for (int j = 0; j <= k; ++j) {
      const LaurentPoly& rj = rr[static_cast<std::size_t>(k - j)];
      const auto uj = static_cast<std::size_t>(j);
      fused_multiply_add(acc, w[uj], rj.derivative(), BigRational(2));
      fused_multiply_add(acc, w[uj].derivative(), rj);
      fused_multiply_add(acc, w_sq[uj], rj, BigRational(-1));
      fused_multiply_add(acc, host.potential[uj] - LaurentPoly(base.energy[uj]), rj);
    }
    out[static_cast<std::size_t>(k)] = std::move(acc);
  }
  return out;
}

StateEvaluator::StateEvaluator(const StateRep& state)
    : radial_(state.radial()),
      order_(state.order()),
      power_(state.power),
      decay_linear_(state.decay_linear.to_double()),
      decay_gauss_(state.decay_gauss.to_double()) {
  for (const auto& rk : state.prefactor.coeffs()) {
    const LaurentPoly shifted = rk.shifted(power_);
    if (auto lo = shifted.min_exponent(); lo && *lo < 0)
      throw Error(ErrorCode::DomainError, "prefactor pole exceeds the x^power factor");
    shifted_prefactor_.emplace_back(shifted);
  }
  for (const auto& gk : state.G.coeffs()) G_.emplace_back(gk);
}

void StateEvaluator::check_domain(double x) const {
  if (radial_ && x < 0.0) throw Error(ErrorCode::DomainError, "radial state needs x >= 0");
  if (!std::isfinite(x)) throw Error(ErrorCode::DomainError, "x must be finite");
}

double StateEvaluator::envelope(double x) const {
  return std::exp(-decay_linear_ * x - 0.5 * decay_gauss_ * x * x);
}

double StateEvaluator::operator()(double x, double lambda, int order) const {
  check_domain(x);
  if (order > order_) throw Error(ErrorCode::OrderExceeded, "state order exceeded");
  double r = 0.0, g = 0.0;
  for (int k = order; k >= 0; --k) r = r * lambda + shifted_prefactor_[static_cast<std::size_t>(k)](x);
  for (int k = order; k >= 1; --k) g = (g + G_[static_cast<std::size_t>(k)](x)) * lambda;
  return r * envelope(x) * std::exp(-g);
}

namespace {

double pade_reducing_numeric(const std::vector<double>& series, PadeOrder po, double lambda) {
  bool polynomial = true;
  for (std::size_t k = 1; k < series.size(); ++k) polynomial = polynomial && series[k] == 0.0;
  if (polynomial) return series[0];
  for (int n = po.n;; --n) {
    try {
      return pade_value_numeric(series, po.m, n, lambda);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::SingularPadeSystem || n == 0) throw;
    }
  }
}

}  // namespace

double StateEvaluator::pade(double x, double lambda, PadeOrder po) const {
  check_domain(x);
  const int order = po.m + po.n;
  if (order > order_) throw Error(ErrorCode::OrderExceeded, "state order exceeded");
  const auto size = static_cast<std::size_t>(order) + 1;
  std::vector<double> g(size, 0.0), r(size, 0.0);
  for (std::size_t k = 0; k < size; ++k) {
    if (k > 0) g[k] = G_[k](x);
    r[k] = shifted_prefactor_[k](x);
  }
  if (!radial_) {
    // Gaussian base: resum prefactor and exponent separately.
    const double prefactor = pade_reducing_numeric(r, po, lambda);
    return prefactor * envelope(x) * std::exp(-pade_reducing_numeric(g, po, lambda));
  }
  // Coulomb base: resum R exp(-G), expanded by E_k = -(1/k) sum_j j g_j E_{k-j}.
  std::vector<double> e(size, 0.0), p(size, 0.0);
  e[0] = 1.0;
  for (std::size_t k = 1; k < size; ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * g[j] * e[k - j];
    e[k] = -s / static_cast<double>(k);
  }
  for (std::size_t k = 0; k < size; ++k)
    for (std::size_t j = 0; j <= k; ++j) p[k] += r[j] * e[k - j];
  return pade_reducing_numeric(p, po, lambda) * envelope(x);
}

double evaluate_state(const StateRep& state, double x, double lambda, int order) {
  return StateEvaluator(state)(x, lambda, order);
}

double normalize(const StateRep& state, double lambda, int order, const QuadratureConfig& config) {
  const StateEvaluator eval(state);
  auto psi = [&](double x) {
    return config.pade ? eval.pade(x, lambda, *config.pade) : eval(x, lambda, order);
  };
  auto density = [&](double x) {
    const double v = psi(x);
    return v * v;
  };
  const bool radial = state.radial();
  // March outward until the density stays below tail_ratio * peak over a
  // window of a quarter of the distance travelled.
  const double step = (radial ? std::max(1, state.n * state.n) : 1.0) / 200.0;
  double peak = 0.0, extent = 0.0, quiet_from = -1.0;
  for (long j = 1;; ++j) {
    const double x = step * static_cast<double>(j);
    if (x > config.domain_bound)
      throw Error(ErrorCode::NonNormalizable, "no decaying tail within |x| <= " +
                                                  std::to_string(config.domain_bound));
    const double d = radial ? density(x) : std::max(density(x), density(-x));
    if (!std::isfinite(d))
      throw Error(ErrorCode::NonNormalizable, "wavefunction is not finite at x = " + std::to_string(x));
    peak = std::max(peak, d);
    if (peak > 0.0 && d < config.tail_ratio * peak) {
      if (quiet_from < 0.0) quiet_from = x;
      if (x >= 1.25 * quiet_from && x - quiet_from >= 20.0 * step) {
        extent = x;
        break;
      }
    } else {
      quiet_from = -1.0;
    }
  }
  using boost::math::quadrature::gauss_kronrod;
  const double total = gauss_kronrod<double, 61>::integrate(density, radial ? 0.0 : -extent, extent,
                                                            15, config.relative_tolerance);
  if (!(total > 0.0) || !std::isfinite(total))
    throw Error(ErrorCode::NonNormalizable, "wavefunction has zero or infinite norm");
  return 1.0 / std::sqrt(total);
}

int count_nodes(const StateRep& state, double lambda, int order, double x_min, double x_max,
                int samples) {
  const StateEvaluator eval(state);
  int nodes = 0, prev = 0;
  for (int j = 1; j < samples; ++j) {
    const double x = x_min + (x_max - x_min) * j / samples;
    const double v = eval(x, lambda, order);
    const int s = (v > 0) - (v < 0);
    if (s != 0) {
      if (prev != 0 && s != prev) ++nodes;
      prev = s;
    }
  }
  return nodes;
}

}  // namespace sea
