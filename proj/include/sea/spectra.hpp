#pragma once

#include <string>
#include <vector>

#include "sea/engine.hpp"

namespace sea {

/// Energy series eps(lambda) = sum_k coeffs[k] lambda^k of one level.
/// Hulthen levels are labelled (n, l); anharmonic levels by r.
struct EnergySeries {
  std::string family;
  int n = 0;
  int l = 0;
  int r = 0;
  ScalarSeries coeffs;

  int order() const { return coeffs.order(); }
  friend bool operator==(const EnergySeries&, const EnergySeries&) = default;
};

/// eps_{nl}: rung r = n-1-l of the chain with b = l+1.
EnergySeries hulthen_energy_series(int n, int l, int order);
/// All levels n = l+1..n_max of one angular momentum, sharing a single chain.
std::vector<EnergySeries> hulthen_energy_series_for_l(int l, int n_max, int order);
EnergySeries anharmonic_energy_series(int r, int order);

/// -(1/n - n lambda/2)^2; OutOfBoundDomain unless 0 <= lambda <= 2/n^2.
double hulthen_energy_closed_l0(int n, double lambda);

/// Exact l = 0 Hulthen state: phi = e^{-lambda b_n x} eta_n(y), y = 1 - e^{-lambda x},
/// with eta_n = sum_{k=1}^{n} c_k y^k from the c_k recurrence terminated at
/// b = b_n = 1/(n lambda) - n/2. The c_k are polynomials in t = 1/lambda and
/// are stored as LaurentPoly in t (c_1 = 1).
class ClosedFormL0 {
 public:
  explicit ClosedFormL0(int n);

  int n() const { return n_; }
  /// c_k(t) for k = 0..n+1 (c_0 = c_{n+1} = 0).
  const std::vector<LaurentPoly>& coefficients() const { return c_; }
  /// Quantized b_n = 1/(n lambda) - n/2.
  double b(double lambda) const;
  /// eta_n(y) at the given lambda.
  double eta(double y, double lambda) const;
  /// Unnormalized phi_{n0}(x, lambda).
  double phi(double x, double lambda) const;
  double energy(double lambda) const { return hulthen_energy_closed_l0(n_, lambda); }

 private:
  int n_;
  std::vector<LaurentPoly> c_;
};

ClosedFormL0 hulthen_l0_state(int n);

/// Horner evaluation of sum_{k<=K} coeffs[k] lambda^k (OrderExceeded if K > order).
double evaluate_truncated(const EnergySeries& series, double lambda, int order);

}  // namespace sea
