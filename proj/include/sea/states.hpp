#pragma once

#include <optional>
#include <vector>

#include "sea/engine.hpp"
#include "sea/resummation.hpp"

namespace sea {

/// psi(x, lambda) = R(x, lambda) x^power exp(-decay_linear x - decay_gauss x^2/2)
///                  exp(-sum_{k>=1} lambda^k G_k(x)).
/// The exponential part is the edge state of base_rung; level is the rung of
/// the Hamiltonian the state currently belongs to (base_rung minus the number
/// of creation operators applied).
struct StateRep {
  ProblemFamily family;
  int n = 0;
  int l = 0;
  int r = 0;
  int base_rung = 0;
  int level = 0;
  PolySeries prefactor;
  int power = 0;
  BigRational decay_linear;
  BigRational decay_gauss;
  PolySeries G;

  int order() const { return prefactor.order(); }
  bool radial() const { return std::holds_alternative<Hulthen>(family) || power != 0; }
};

/// G_{rk} = integral of w_{rk}, k >= 1 (the k = 0 slot is left zero).
PolySeries build_G(const ChainSolution& chain, int r);

StateRep edge_state(const ChainSolution& chain, int r);

/// a_q^dagger applied to a state: R -> -R' + (W_q + W_base) R, truncated at K.
/// RungOrderViolation unless q < state.level.
StateRep apply_creation(const StateRep& state, int q, const ChainSolution& chain);

/// Hulthen (n, l): chain b = l+1 to rung n-1-l; anharmonic: rung r.
/// Creation operators a_{r-1}^dagger .. a_0^dagger are applied to the edge state.
StateRep build_eigenstate(const ChainSolution& chain, int r);
StateRep build_hulthen_state(int n, int l, int order);
StateRep build_anharmonic_state(int r, int order);

/// Per order k: (-d^2/dx^2 + v_level - eps)psi divided by the edge exponential.
std::vector<LaurentPoly> hamiltonian_residual(const StateRep& state, const ChainSolution& chain,
                                              int order);

/// Floating evaluation with cached double coefficients.
class StateEvaluator {
 public:
  explicit StateEvaluator(const StateRep& state);

  /// Series truncated at order K.
  double operator()(double x, double lambda, int order) const;
  /// Pointwise [m/n] Pade in lambda, m+n <= state order. Radial states resum
  /// R exp(-G) as one series; Gaussian-based states resum R and G separately.
  double pade(double x, double lambda, PadeOrder order) const;

 private:
  void check_domain(double x) const;
  double envelope(double x) const;

  bool radial_;
  int order_;
  int power_;
  double decay_linear_;
  double decay_gauss_;
  std::vector<NumericPoly> shifted_prefactor_;  // x^power R_k
  std::vector<NumericPoly> G_;
};

double evaluate_state(const StateRep& state, double x, double lambda, int order);

struct QuadratureConfig {
  double relative_tolerance = 1e-10;
  double tail_ratio = 1e-16;
  double domain_bound = 1e4;
  std::optional<PadeOrder> pade;
};

/// N such that the integral of (N psi)^2 over the domain is 1.
double normalize(const StateRep& state, double lambda, int order,
                 const QuadratureConfig& config = {});

/// Sign changes of psi on a uniform grid of the open domain (x_min, x_max).
int count_nodes(const StateRep& state, double lambda, int order, double x_min, double x_max,
                int samples = 20000);

}  // namespace sea
