#include "sea/bernoulli.hpp"

#include <mutex>
#include <unordered_map>

namespace sea {

namespace {

BigRational bernoulli_double_sum(unsigned k) {
  mpq_class total = 0;
  for (unsigned n = 0; n <= k; ++n) {
    mpz_class inner = 0;
    for (unsigned m = 0; m <= n; ++m) {
      mpz_class power;
      // 0^0 = 1 gives the empty-product case B_0 = 1.
      mpz_ui_pow_ui(power.get_mpz_t(), m, k);
      mpz_class term = binomial(n, m) * power;
      if (m % 2 == 1) inner -= term;
      else inner += term;
    }
    total += mpq_class(inner, n + 1);
  }
  total.canonicalize();
  return BigRational(total);
}

}  // namespace

BigRational bernoulli_minus(unsigned k) {
  static std::mutex mutex;
  static std::unordered_map<unsigned, BigRational> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  BigRational value = bernoulli_double_sum(k);
  std::lock_guard lock(mutex);
  cache.emplace(k, value);
  return value;
}

}  // namespace sea
