#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sea/bigrational.hpp"

namespace sea {

/// Sparse Laurent polynomial in x with exact rational coefficients.
/// Zero coefficients are never stored, so equality is entry-wise.
class LaurentPoly {
 public:
  using Terms = std::map<int, BigRational>;

  LaurentPoly() = default;
  LaurentPoly(const BigRational& constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(std::initializer_list<std::pair<const int, BigRational>> terms);

  static LaurentPoly monomial(int exponent, const BigRational& coefficient);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of x^exponent (zero when absent).
  BigRational coeff(int exponent) const;
  void set(int exponent, const BigRational& coefficient);
  void add_to(int exponent, const BigRational& coefficient);

  /// Lowest / highest stored exponent; empty for the zero polynomial.
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;

  LaurentPoly derivative() const;
  /// Term-wise antiderivative with zero integration constant; throws
  /// NonIntegrableTerm when an x^-1 term is present.
  LaurentPoly antiderivative() const;
  /// Multiplies by x^shift.
  LaurentPoly shifted(int shift) const;

  double evaluate(double x) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const BigRational& s);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const BigRational& s) { return a *= s; }
  friend LaurentPoly operator*(const BigRational& s, LaurentPoly a) { return a *= s; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  /// Human readable form, e.g. "1/2*x^3 - 3/4*x + 1 - 2*x^-1".
  std::string to_string() const;

 private:
  Terms terms_;
};

/// Accumulates a += b * c without building the intermediate product.
void fused_multiply_add(LaurentPoly& acc, const LaurentPoly& b, const LaurentPoly& c,
                        const BigRational& scale = BigRational(1));

/// Numeric snapshot of a LaurentPoly for repeated floating evaluation.
class NumericPoly {
 public:
  NumericPoly() = default;
  explicit NumericPoly(const LaurentPoly& p);
  double operator()(double x) const;
  bool empty() const { return terms_.empty(); }
  int min_exponent() const { return terms_.empty() ? 0 : terms_.front().first; }

 private:
  std::vector<std::pair<int, double>> terms_;
};

}  // namespace sea
