#include "sea/engine.hpp"

#include "sea/bernoulli.hpp"
#include "sea/errors.hpp"

namespace sea {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

LeadingSuperpotential rung0_leading(const ProblemFamily& family) {
  return std::visit(
      Overloaded{
          [](const Hulthen& h) {
            const BigRational b(h.l + 1);
            return LeadingSuperpotential{-b, b.inverse(), BigRational(), -(b * b).inverse()};
          },
          [](const Anharmonic&) {
            return LeadingSuperpotential{BigRational(), BigRational(), BigRational(1),
                                         BigRational(1)};
          },
          [](const GenericPerturbed& g) { return g.leading; },
      },
      family);
}

/// v = w^2 - w' + eps for the leading term.
LaurentPoly generated_potential(const LeadingSuperpotential& lead) {
  const LaurentPoly w = lead.polynomial();
  return w * w - w.derivative() + LaurentPoly(lead.energy);
}

}  // namespace

LaurentPoly LeadingSuperpotential::polynomial() const {
  LaurentPoly w;
  w.set(-1, pole);
  w.set(0, constant);
  w.set(1, linear);
  return w;
}

std::string family_name(const ProblemFamily& family) {
  return std::visit(Overloaded{[](const Hulthen&) { return std::string("hulthen"); },
                               [](const Anharmonic&) { return std::string("anharmonic"); },
                               [](const GenericPerturbed&) { return std::string("generic"); }},
                    family);
}

void validate_family(const ProblemFamily& family) {
  if (const auto* h = std::get_if<Hulthen>(&family)) {
    if (h->l < 0) throw Error(ErrorCode::InvalidFamily, "Hulthen requires l >= 0");
    return;
  }
  if (const auto* g = std::get_if<GenericPerturbed>(&family)) {
    if (g->leading.coulomb_type() == g->leading.oscillator_type())
      throw Error(ErrorCode::InvalidLeading,
                  "leading superpotential must be exactly one of Coulomb or oscillator type");
    if (g->leading.coulomb_type() && g->leading.constant.is_zero())
      throw Error(ErrorCode::InvalidLeading, "Coulomb-type leading term needs a nonzero constant");
    if (auto lo = g->perturbation.min_exponent(); lo && *lo < 0)
      throw Error(ErrorCode::InvalidFamily, "perturbation must be a polynomial");
    if (g->base_potential && *g->base_potential != generated_potential(g->leading))
      throw Error(ErrorCode::InvalidLeading,
                  "leading superpotential does not satisfy the k=0 Riccati identity");
  }
}

int family_b(const ProblemFamily& family) {
  if (const auto* h = std::get_if<Hulthen>(&family)) return h->l + 1;
  return 0;
}

LaurentPoly base_potential_coefficient(const ProblemFamily& family, int k) {
  if (k < 0) throw Error(ErrorCode::OrderExceeded, "negative order");
  return std::visit(
      Overloaded{
          [k](const Hulthen& h) {
            if (k == 0) {
              LaurentPoly v;
              v.set(-2, BigRational(static_cast<long>(h.l) * (h.l + 1)));
              v.set(-1, BigRational(-2));
              return v;
            }
            // h_k x^{k-1} / k! with h_k = -2 B_k^-.
            const BigRational hk = BigRational(-2) * bernoulli_minus(static_cast<unsigned>(k));
            return LaurentPoly::monomial(
                k - 1, hk / BigRational(factorial(static_cast<unsigned>(k)), mpz_class(1)));
          },
          [k](const Anharmonic&) {
            if (k == 0) return LaurentPoly::monomial(2, BigRational(1));
            if (k == 1) return LaurentPoly::monomial(4, BigRational(1));
            return LaurentPoly();
          },
          [k](const GenericPerturbed& g) {
            if (k == 0) return g.base_potential ? *g.base_potential : generated_potential(g.leading);
            if (k == 1) return g.perturbation;
            return LaurentPoly();
          },
      },
      family);
}

ChainSolution::ChainSolution(ProblemFamily family, int r_max, int order)
    : family_(std::move(family)), r_max_(r_max), order_(order) {}

const Rung& ChainSolution::rung(int r) const {
  if (r < 0 || r >= static_cast<int>(rungs_.size()))
    throw Error(ErrorCode::ChainIncomplete, "rung " + std::to_string(r) + " not solved");
  return rungs_[static_cast<std::size_t>(r)];
}

void ChainSolution::start_rung(Rung rung) {
  if (rung.r != static_cast<int>(rungs_.size()))
    throw Error(ErrorCode::ChainIncomplete, "rungs must be started in order");
  rungs_.push_back(std::move(rung));
}

void ChainSolution::append_order(int r, LaurentPoly w, BigRational energy,
                                 LaurentPoly potential) {
  if (r < 0 || r >= static_cast<int>(rungs_.size()))
    throw Error(ErrorCode::ChainIncomplete, "rung not started");
  Rung& rg = rungs_[static_cast<std::size_t>(r)];
  rg.superpotential.push_back(std::move(w));
  rg.energy.push_back(std::move(energy));
  rg.potential.push_back(std::move(potential));
}

LaurentPoly potential_coefficient(const ChainSolution& chain, int r, int k) {
  if (r == 0) return base_potential_coefficient(chain.family(), k);
  const Rung& prev = chain.rung(r - 1);
  if (prev.order() < k || prev.potential.order() < k)
    throw Error(ErrorCode::ChainIncomplete, "rung " + std::to_string(r - 1) +
                                                " not solved to order " + std::to_string(k));
  const auto kk = static_cast<std::size_t>(k);
  return prev.potential[kk] + prev.superpotential[kk].derivative() * BigRational(2);
}

LeadingSuperpotential solve_leading(const ProblemFamily& family, int r) {
  validate_family(family);
  if (r < 0) throw Error(ErrorCode::InvalidLeading, "negative rung");
  const LeadingSuperpotential base = rung0_leading(family);
  LeadingSuperpotential lead = base;
  if (base.coulomb_type()) {
    // Each partner step raises the centrifugal coefficient: pole -> pole - 1,
    // constant * pole conserved, energy shifts by c^2 - c_r^2.
    const BigRational pole_r = base.pole - BigRational(r);
    if (pole_r.is_zero())
      throw Error(ErrorCode::InvalidLeading, "partner rung reaches a vanishing pole");
    lead.pole = pole_r;
    lead.constant = base.constant * base.pole / pole_r;
    lead.energy = base.energy + base.constant * base.constant - lead.constant * lead.constant;
  } else {
    lead.energy = base.energy + BigRational(2) * base.linear * BigRational(r);
  }

  // v_{r0} by repeated partner steps from v_{00}, then the Riccati check.
  LaurentPoly v = base_potential_coefficient(family, 0);
  for (int q = 0; q < r; ++q) {
    LeadingSuperpotential prev = base;
    if (q > 0) prev = solve_leading(family, q);
    v += prev.polynomial().derivative() * BigRational(2);
  }
  const LaurentPoly w = lead.polynomial();
  if (w * w - w.derivative() != v - LaurentPoly(lead.energy))
    throw Error(ErrorCode::InvalidLeading,
                "leading term fails the k=0 Riccati identity at rung " + std::to_string(r));
  return lead;
}

LaurentPoly convolution_B(const Rung& rung, int k) {
  if (k - 1 > rung.order())
    throw Error(ErrorCode::ChainIncomplete, "B needs orders 1..k-1");
  LaurentPoly out;
  const auto& w = rung.superpotential;
  for (int m = 1; 2 * m <= k; ++m) {
    const int n = k - m;
    if (n < 1) continue;
    fused_multiply_add(out, w[static_cast<std::size_t>(m)], w[static_cast<std::size_t>(n)],
                       BigRational(m == n ? 1 : 2));
  }
  return out;
}

BigRational convolution_B(const Rung& rung, int k, int alpha) {
  return convolution_B(rung, k).coeff(alpha);
}

std::pair<LaurentPoly, BigRational> solve_order(const ChainSolution& chain, int r, int k) {
  if (k < 1) throw Error(ErrorCode::OrderExceeded, "solve_order needs k >= 1");
  const Rung& rung = chain.rung(r);
  if (rung.order() < k - 1)
    throw Error(ErrorCode::ChainIncomplete, "orders below k not solved for rung " +
                                                std::to_string(r));
  const LaurentPoly v = potential_coefficient(chain, r, k);
  const LaurentPoly rhs = v - convolution_B(rung, k);  // S = v - B; eps still to subtract
  const LeadingSuperpotential& lead = rung.leading;

  LaurentPoly w;
  BigRational eps;
  if (rhs.is_zero()) return {w, eps};
  const int top = *rhs.max_exponent();
  const int bottom = *rhs.min_exponent();

  if (lead.oscillator_type()) {
    if (bottom < 0)
      throw Error(ErrorCode::UnsolvableOrder, "oscillator-type rung with singular inhomogeneity");
    const BigRational two_s = BigRational(2) * lead.linear;
    const BigRational two_c = BigRational(2) * lead.constant;
    // x^g: 2s w_{g-1} + 2c w_g - (g+1) w_{g+1} = S_g, solved for w_{g-1}.
    for (int g = top; g >= 1; --g) {
      BigRational value = rhs.coeff(g) - two_c * w.coeff(g) + BigRational(g + 1) * w.coeff(g + 1);
      w.set(g - 1, value / two_s);
    }
    eps = rhs.coeff(0) - two_c * w.coeff(0) + w.coeff(1);
  } else if (lead.coulomb_type()) {
    if (bottom < -1)
      throw Error(ErrorCode::UnsolvableOrder, "Coulomb-type rung with x^-2 inhomogeneity");
    if (lead.constant.is_zero())
      throw Error(ErrorCode::UnsolvableOrder, "Coulomb-type rung with zero constant term");
    const BigRational two_p = BigRational(2) * lead.pole;
    const BigRational two_c = BigRational(2) * lead.constant;
    // x^g: (2p - g - 1) w_{g+1} + 2c w_g = S_g, descending to g = 1.
    for (int g = top; g >= 1; --g) {
      BigRational value = rhs.coeff(g) - (two_p - BigRational(g + 1)) * w.coeff(g + 1);
      w.set(g, value / two_c);
    }
    // x^-1 fixes w_0, then the x^0 row yields the energy.
    w.set(0, rhs.coeff(-1) / two_p);
    eps = rhs.coeff(0) - (two_p - BigRational(1)) * w.coeff(1) - two_c * w.coeff(0);
  } else {
    throw Error(ErrorCode::InvalidLeading, "leading term is neither Coulomb nor oscillator type");
  }

  // The elimination is only triangular if every row is satisfied.
  const LaurentPoly lead_w = lead.polynomial();
  LaurentPoly lhs = lead_w * w * BigRational(2) - w.derivative() + LaurentPoly(eps);
  if (lhs != rhs)
    throw Error(ErrorCode::UnsolvableOrder, "no polynomial solution at rung " +
                                                std::to_string(r) + ", order " +
                                                std::to_string(k));
  return {std::move(w), std::move(eps)};
}

std::vector<LaurentPoly> riccati_residual(const PolySeries& w, const PolySeries& v,
                                          const ScalarSeries& energy, int order) {
  if (order > w.order() || order > v.order() || order > energy.order())
    throw Error(ErrorCode::OrderExceeded, "residual order exceeds series order");
  std::vector<LaurentPoly> out;
  out.reserve(static_cast<std::size_t>(order + 1));
  for (int k = 0; k <= order; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    LaurentPoly res = series_convolution_order(w, w, k);
    res -= w[kk].derivative();
    res -= v[kk];
    res += LaurentPoly(energy[kk]);
    out.push_back(std::move(res));
  }
  return out;
}

ChainSolution solve_chain(const ProblemFamily& family, int r_max, int order) {
  if (r_max < 0 || order < 0)
    throw Error(ErrorCode::OrderExceeded, "solve_chain needs r_max >= 0 and K >= 0");
  validate_family(family);
  ChainSolution chain(family, r_max, order);
  for (int r = 0; r <= r_max; ++r) {
    Rung rung;
    rung.r = r;
    rung.leading = solve_leading(family, r);
    chain.start_rung(std::move(rung));
    const LeadingSuperpotential& lead = chain.rung(r).leading;
    chain.append_order(r, lead.polynomial(), lead.energy, potential_coefficient(chain, r, 0));
    for (int k = 1; k <= order; ++k) {
      auto [w, eps] = solve_order(chain, r, k);
      chain.append_order(r, std::move(w), std::move(eps), potential_coefficient(chain, r, k));
    }
    const Rung& done = chain.rung(r);
    const auto residuals = riccati_residual(done.superpotential, done.potential, done.energy, order);
    for (int k = 0; k <= order; ++k)
      if (!residuals[static_cast<std::size_t>(k)].is_zero())
        throw Error(ErrorCode::ResidualNonzero, "rung " + std::to_string(r) + " order " +
                                                    std::to_string(k) + " residual " +
                                                    residuals[static_cast<std::size_t>(k)].to_string());
  }
  return chain;
}

}  // namespace sea
