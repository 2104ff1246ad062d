#include "sea/spectra.hpp"

#include <cmath>

#include "sea/errors.hpp"

namespace sea {

namespace {

void check_hulthen_labels(int n, int l, int order) {
  if (n < 1 || l < 0 || l > n - 1)
    throw Error(ErrorCode::InvalidFamily, "Hulthen labels need n >= 1 and 0 <= l <= n-1");
  if (order < 0) throw Error(ErrorCode::OrderExceeded, "negative series order");
}

}  // namespace

EnergySeries hulthen_energy_series(int n, int l, int order) {
  check_hulthen_labels(n, l, order);
  const int r = n - 1 - l;
  const ChainSolution chain = solve_chain(Hulthen{l}, r, order);
  return EnergySeries{"hulthen", n, l, r, chain.rung(r).energy};
}

std::vector<EnergySeries> hulthen_energy_series_for_l(int l, int n_max, int order) {
  check_hulthen_labels(n_max, l, order);
  const ChainSolution chain = solve_chain(Hulthen{l}, n_max - 1 - l, order);
  std::vector<EnergySeries> out;
  for (int r = 0; r <= n_max - 1 - l; ++r)
    out.push_back(EnergySeries{"hulthen", l + 1 + r, l, r, chain.rung(r).energy});
  return out;
}

EnergySeries anharmonic_energy_series(int r, int order) {
  if (r < 0 || order < 0) throw Error(ErrorCode::InvalidFamily, "anharmonic needs r, K >= 0");
  const ChainSolution chain = solve_chain(Anharmonic{}, r, order);
  return EnergySeries{"anharmonic", 0, 0, r, chain.rung(r).energy};
}

double hulthen_energy_closed_l0(int n, double lambda) {
  if (n < 1) throw Error(ErrorCode::InvalidFamily, "n must be positive");
  const double bound = 2.0 / (static_cast<double>(n) * n);
  if (lambda < 0.0 || lambda > bound)
    throw Error(ErrorCode::OutOfBoundDomain, "lambda outside [0, 2/n^2]");
  const double t = 1.0 / n - n * lambda / 2.0;
  return -t * t;
}

ClosedFormL0::ClosedFormL0(int n) : n_(n) {
  if (n < 1) throw Error(ErrorCode::InvalidFamily, "n must be positive");
  // With b = b_n the recurrence factor k(k-1) + (2b+1)k - 2t factors into
  // (k - n)(k + 2t/n), t = 1/lambda.
  c_.assign(static_cast<std::size_t>(n) + 2, LaurentPoly());
  c_[1] = LaurentPoly(BigRational(1));
  for (int k = 1; k <= n; ++k) {
    LaurentPoly factor;
    factor.set(0, BigRational(k));
    factor.set(1, BigRational(2, n));
    factor *= BigRational(k - n, static_cast<long>(k) * (k + 1));
    c_[static_cast<std::size_t>(k) + 1] = c_[static_cast<std::size_t>(k)] * factor;
  }
}

double ClosedFormL0::b(double lambda) const { return 1.0 / (n_ * lambda) - n_ / 2.0; }

double ClosedFormL0::eta(double y, double lambda) const {
  const double t = 1.0 / lambda;
  double sum = 0.0;
  for (int k = n_; k >= 1; --k) sum = sum * y + c_[static_cast<std::size_t>(k)].evaluate(t);
  return sum * y;
}

double ClosedFormL0::phi(double x, double lambda) const {
  const double y = -std::expm1(-lambda * x);
  return std::exp(-lambda * b(lambda) * x) * eta(y, lambda);
}

ClosedFormL0 hulthen_l0_state(int n) { return ClosedFormL0(n); }

double evaluate_truncated(const EnergySeries& series, double lambda, int order) {
  if (order < 0 || order > series.order())
    throw Error(ErrorCode::OrderExceeded, "truncation order exceeds series order");
  double acc = 0.0;
  for (int k = order; k >= 0; --k) acc = acc * lambda + series.coeffs[static_cast<std::size_t>(k)].to_double();
  return acc;
}

}  // namespace sea
