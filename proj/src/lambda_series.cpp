#include "sea/lambda_series.hpp"

namespace sea {

LaurentPoly series_convolution_order(const PolySeries& a, const PolySeries& b, int k) {
  if (k < 0 || k > std::min(a.order(), b.order()))
    throw Error(ErrorCode::OrderExceeded, "convolution order out of range");
  LaurentPoly out;
  for (int m = 0; m <= k; ++m)
    fused_multiply_add(out, a[static_cast<std::size_t>(m)], b[static_cast<std::size_t>(k - m)]);
  return out;
}

PolySeries series_product(const PolySeries& a, const PolySeries& b) {
  const int order = std::min(a.order(), b.order());
  PolySeries out;
  for (int k = 0; k <= order; ++k) out.push_back(series_convolution_order(a, b, k));
  return out;
}

PolySeries series_sum(const PolySeries& a, const PolySeries& b) {
  const int order = std::min(a.order(), b.order());
  PolySeries out;
  for (int k = 0; k <= order; ++k)
    out.push_back(a[static_cast<std::size_t>(k)] + b[static_cast<std::size_t>(k)]);
  return out;
}

PolySeries series_derivative(const PolySeries& a) {
  PolySeries out;
  for (const auto& c : a.coeffs()) out.push_back(c.derivative());
  return out;
}

}  // namespace sea
