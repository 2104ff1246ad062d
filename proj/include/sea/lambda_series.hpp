#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "sea/errors.hpp"
#include "sea/laurent_poly.hpp"

namespace sea {

/// Truncated power series in lambda: coefficients for k = 0..order().
template <class Payload>
class LambdaSeries {
 public:
  LambdaSeries() = default;
  explicit LambdaSeries(std::vector<Payload> coeffs) : coeffs_(std::move(coeffs)) {}
  explicit LambdaSeries(std::size_t order) : coeffs_(order + 1) {}

  /// Order K, i.e. size - 1. An empty series has order -1.
  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool empty() const { return coeffs_.empty(); }

  const Payload& operator[](std::size_t k) const { return coeffs_[k]; }
  Payload& operator[](std::size_t k) { return coeffs_[k]; }
  const Payload& at(int k) const {
    if (k < 0 || k > order()) throw Error(ErrorCode::OrderExceeded, "series order exceeded");
    return coeffs_[static_cast<std::size_t>(k)];
  }

  void push_back(Payload p) { coeffs_.push_back(std::move(p)); }
  const std::vector<Payload>& coeffs() const { return coeffs_; }

  /// Copy truncated to order k (k <= order()).
  LambdaSeries truncated(int k) const {
    if (k > order()) throw Error(ErrorCode::OrderExceeded, "cannot truncate above order");
    return LambdaSeries(std::vector<Payload>(coeffs_.begin(), coeffs_.begin() + (k + 1)));
  }

  friend bool operator==(const LambdaSeries&, const LambdaSeries&) = default;

 private:
  std::vector<Payload> coeffs_;
};

using PolySeries = LambdaSeries<LaurentPoly>;
using ScalarSeries = LambdaSeries<BigRational>;

/// Sum_{m+n=k} a_m b_n, exactly. Throws OrderExceeded unless
/// 0 <= k <= min(order(a), order(b)).
LaurentPoly series_convolution_order(const PolySeries& a, const PolySeries& b, int k);

/// Product of two series truncated at min of the two orders.
PolySeries series_product(const PolySeries& a, const PolySeries& b);
PolySeries series_sum(const PolySeries& a, const PolySeries& b);
PolySeries series_derivative(const PolySeries& a);

}  // namespace sea
