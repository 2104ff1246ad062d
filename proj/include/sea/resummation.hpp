#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sea/bigrational.hpp"
#include "sea/spectra.hpp"

namespace sea {

/// [m/n] approximant numerator(lambda)/denominator(lambda), denominator[0] = 1.
struct PadeApproximant {
  int m = 0;
  int n = 0;
  std::vector<BigRational> numerator;
  std::vector<BigRational> denominator;
};

struct PadeOrder {
  int m = 0;
  int n = 0;
  friend bool operator==(const PadeOrder&, const PadeOrder&) = default;
};

/// Parses "m/n".
PadeOrder parse_pade_order(const std::string& text);
std::string to_string(const PadeOrder& order);

/// Exact [m/n] approximant of the series; SingularPadeSystem when the
/// denominator system is singular. The Taylor re-expansion is verified
/// before returning.
PadeApproximant pade(std::span<const BigRational> series, int m, int n);
/// Like pade(), but lowers n until the system is nonsingular; the orders
/// actually used are in the returned approximant.
PadeApproximant pade_reducing(std::span<const BigRational> series, int m, int n);

/// Taylor coefficients 0..order of numerator/denominator.
std::vector<BigRational> taylor_coefficients(const PadeApproximant& p, int order);

/// Floating evaluation; PoleProximity when the denominator has cancelled to
/// below 1e-12 of the magnitude of its terms.
double pade_eval(const PadeApproximant& p, double lambda);
/// Exact sign of numerator and denominator at a rational point.
std::pair<int, int> pade_signs(const PadeApproximant& p, const BigRational& lambda);

struct CriticalLambda {
  int n = 0;
  int l = 0;
  double lambda_c = 0.0;
  double uncertainty = 0.0;
  double root_first = 0.0;
  double root_second = 0.0;
  std::string pade_used;
  std::vector<std::string> events;
  std::vector<PadeApproximant> approximants;
};

struct CriticalOptions {
  int grid_points = 1000;
  double interval_tolerance = 1e-12;
  double pole_margin = 1e-3;
};

/// Zero of eps_{nl}(lambda) from two Pade approximants of the given series.
/// lambda_c is the mean of the two roots and the uncertainty half their
/// difference. l = 0 levels use the closed form 2/n^2.
CriticalLambda critical_lambda(const EnergySeries& series, PadeOrder first, PadeOrder second,
                               const CriticalOptions& options = {});
CriticalLambda critical_lambda(int n, int l, int series_order, PadeOrder first, PadeOrder second,
                               const CriticalOptions& options = {});

struct Reconstruction {
  double value = 0.0;
  double uncertainty = 0.0;
  PadeApproximant first;
  PadeApproximant second;
};

/// Value from the first approximant; uncertainty = |first - second|.
Reconstruction reconstruct_energy(const EnergySeries& series, double lambda, PadeOrder first,
                                  PadeOrder second);

/// Pade value of a floating-point coefficient list at a point (double LU
/// solve); used for pointwise wavefunction resummation.
double pade_value_numeric(std::span<const double> series, int m, int n, double lambda);

}  // namespace sea
