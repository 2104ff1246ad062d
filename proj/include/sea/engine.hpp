#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sea/bigrational.hpp"
#include "sea/lambda_series.hpp"
#include "sea/laurent_poly.hpp"

namespace sea {

/// k = 0 superpotential w = pole/x + constant + linear*x together with its
/// energy. Exactly one of "Coulomb type" (pole != 0, linear = 0) or
/// "oscillator type" (pole = 0, linear != 0) is allowed.
struct LeadingSuperpotential {
  BigRational pole;
  BigRational constant;
  BigRational linear;
  BigRational energy;

  bool coulomb_type() const { return !pole.is_zero() && linear.is_zero(); }
  bool oscillator_type() const { return pole.is_zero() && !linear.is_zero(); }
  LaurentPoly polynomial() const;

  friend bool operator==(const LeadingSuperpotential&, const LeadingSuperpotential&) = default;
};

/// Radial Hulthen problem l(l+1)/x^2 - 2 lambda/(e^{lambda x} - 1).
struct Hulthen {
  int l = 0;
  friend bool operator==(const Hulthen&, const Hulthen&) = default;
};

/// One-dimensional quartic oscillator x^2 + lambda x^4.
struct Anharmonic {
  friend bool operator==(const Anharmonic&, const Anharmonic&) = default;
};

/// v(x) + lambda v_p(x) where v is generated by a known leading
/// superpotential and v_p is a polynomial. When base_potential is given it
/// must equal w^2 - w' + energy of the leading term.
struct GenericPerturbed {
  LeadingSuperpotential leading;
  LaurentPoly perturbation;
  std::optional<LaurentPoly> base_potential;
  friend bool operator==(const GenericPerturbed&, const GenericPerturbed&) = default;
};

using ProblemFamily = std::variant<Hulthen, Anharmonic, GenericPerturbed>;

std::string family_name(const ProblemFamily& family);
/// Throws InvalidFamily / InvalidLeading when the family violates its invariants.
void validate_family(const ProblemFamily& family);
/// b = l + 1 for Hulthen, 0 otherwise.
int family_b(const ProblemFamily& family);
/// Coefficient v_{0k}(x) of the lambda expansion of the original potential.
LaurentPoly base_potential_coefficient(const ProblemFamily& family, int k);

/// Solved data for one Hamiltonian H_r of the partner chain.
struct Rung {
  int r = 0;
  LeadingSuperpotential leading;
  PolySeries superpotential;  // w_{rk}(x), k = 0..K
  ScalarSeries energy;        // eps_{rk}
  PolySeries potential;       // v_{rk}(x)

  int order() const { return superpotential.order(); }
};

/// Partner chain {H_0..H_rMax} solved through order K. Built incrementally by
/// solve_chain; immutable (and safe to share) once returned.
class ChainSolution {
 public:
  ChainSolution(ProblemFamily family, int r_max, int order);

  const ProblemFamily& family() const { return family_; }
  int b() const { return family_b(family_); }
  int r_max() const { return r_max_; }
  int order() const { return order_; }
  const std::vector<Rung>& rungs() const { return rungs_; }
  const Rung& rung(int r) const;
  /// Number of rungs that have at least their leading term.
  int rungs_started() const { return static_cast<int>(rungs_.size()); }

  // Incremental construction (used by solve_chain and tests).
  void start_rung(Rung rung);
  void append_order(int r, LaurentPoly w, BigRational energy, LaurentPoly potential);

 private:
  ProblemFamily family_;
  int r_max_;
  int order_;
  std::vector<Rung> rungs_;
};

/// v_{rk}(x): from the family for r = 0, else v_{r-1,k} + 2 w'_{r-1,k}.
/// Throws ChainIncomplete when rung r-1 is not solved to order k.
LaurentPoly potential_coefficient(const ChainSolution& chain, int r, int k);

/// (w_{r0}, eps_{r0}) for rung r, derived from the family's leading term and
/// checked against the k = 0 Riccati identity (InvalidLeading on failure).
LeadingSuperpotential solve_leading(const ProblemFamily& family, int r);

/// B_{rk} = sum_{m+n=k, m,n>=1} w_{rm} w_{rn}.
LaurentPoly convolution_B(const Rung& rung, int k);
BigRational convolution_B(const Rung& rung, int k, int alpha);

/// Triangular solve of 2 w_{r0} w_{rk} - w'_{rk} = -B_{rk} + v_{rk} - eps_{rk}.
std::pair<LaurentPoly, BigRational> solve_order(const ChainSolution& chain, int r, int k);

/// Full chain for rungs 0..r_max through order K; every rung is checked
/// against the exact Riccati identity (ResidualNonzero on failure).
ChainSolution solve_chain(const ProblemFamily& family, int r_max, int order);

/// Per order k <= K: C_k - w'_k - v_k + eps_k, zero for a valid solution.
std::vector<LaurentPoly> riccati_residual(const PolySeries& w, const PolySeries& v,
                                          const ScalarSeries& energy, int order);

}  // namespace sea
