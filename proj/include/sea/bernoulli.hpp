#pragma once

#include "sea/bigrational.hpp"

namespace sea {

/// Bernoulli number B_k^- (B_1 = -1/2 convention) from the explicit double
///   B_k = sum_{n=0}^{k} sum_{m=0}^{n} (-1)^m C(n,m) m^k / (n+1).
/// Results are memoized; safe to call from several threads.
BigRational bernoulli_minus(unsigned k);

}  // namespace sea
