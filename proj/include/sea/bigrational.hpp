#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace sea {

/// Exact fraction over arbitrary-precision integers, always in lowest terms
/// with a positive denominator. Backed by GMP's mpq.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(int value) : q_(static_cast<long>(value)) {}  // NOLINT
  BigRational(long num, long den);
  explicit BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }
  BigRational(const mpz_class& num, const mpz_class& den);

  /// Parses "p/q" or "p" (optional leading sign). Throws Error(ParseError).
  static BigRational parse(std::string_view text);
  /// Exact conversion of a finite double (every double is a dyadic rational).
  static BigRational from_double(double value);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  double to_double() const { return q_.get_d(); }
  /// "p/q", or "p" when q = 1.
  std::string to_string() const;
  /// Decimal rendering with the given number of significant digits (rounded
  /// half away from zero), scientific notation when the exponent is extreme.
  std::string to_decimal(int significant_digits) const;

  BigRational abs() const { return BigRational(mpq_class(::abs(q_))); }
  BigRational inverse() const;
  BigRational pow(unsigned exponent) const;

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const { return BigRational(mpq_class(-q_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_{0};
};

/// Binomial coefficient C(n, m) as an exact integer.
mpz_class binomial(unsigned n, unsigned m);
/// n! as an exact integer.
mpz_class factorial(unsigned n);

}  // namespace sea
