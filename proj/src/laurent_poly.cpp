#include "sea/laurent_poly.hpp"

#include <cmath>
#include <sstream>

#include "sea/errors.hpp"

namespace sea {

LaurentPoly::LaurentPoly(const BigRational& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<const int, BigRational>> terms) {
  for (const auto& [e, c] : terms) add_to(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const BigRational& coefficient) {
  LaurentPoly p;
  p.set(exponent, coefficient);
  return p;
}

BigRational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigRational() : it->second;
}

void LaurentPoly::set(int exponent, const BigRational& coefficient) {
  if (coefficient.is_zero()) terms_.erase(exponent);
  else terms_[exponent] = coefficient;
}

void LaurentPoly::add_to(int exponent, const BigRational& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> LaurentPoly::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::optional<int> LaurentPoly::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly d;
  for (const auto& [e, c] : terms_)
    if (e != 0) d.terms_.emplace(e - 1, c * BigRational(e));
  return d;
}

LaurentPoly LaurentPoly::antiderivative() const {
  LaurentPoly a;
  for (const auto& [e, c] : terms_) {
    if (e == -1)
      throw Error(ErrorCode::NonIntegrableTerm, "x^-1 term has a logarithmic antiderivative");
    a.terms_.emplace(e + 1, c / BigRational(e + 1));
  }
  return a;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly s;
  for (const auto& [e, c] : terms_) s.terms_.emplace_hint(s.terms_.end(), e + shift, c);
  return s;
}

double LaurentPoly::evaluate(double x) const {
  double sum = 0.0;
  for (const auto& [e, c] : terms_) sum += c.to_double() * std::pow(x, e);
  return sum;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_to(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_to(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const BigRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly n = *this;
  for (auto& [e, c] : n.terms_) c = -c;
  return n;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  fused_multiply_add(p, a, b);
  return p;
}

void fused_multiply_add(LaurentPoly& acc, const LaurentPoly& b, const LaurentPoly& c,
                        const BigRational& scale) {
  if (b.is_zero() || c.is_zero() || scale.is_zero()) return;
  std::map<int, mpq_class> sums;
  for (const auto& [eb, cb] : b.terms())
    for (const auto& [ec, cc] : c.terms()) sums[eb + ec] += cb.raw() * cc.raw();
  const bool unit = scale == BigRational(1);
  for (auto& [e, s] : sums) {
    BigRational term{mpq_class(s)};
    if (!unit) term *= scale;
    acc.add_to(e, term);
  }
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    BigRational mag = c.abs();
    if (first) out << (c.sign() < 0 ? "-" : "");
    else out << (c.sign() < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != BigRational(1)) out << mag << '*';
    out << 'x';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

NumericPoly::NumericPoly(const LaurentPoly& p) {
  terms_.reserve(p.size());
  for (const auto& [e, c] : p.terms()) terms_.emplace_back(e, c.to_double());
}

double NumericPoly::operator()(double x) const {
  if (terms_.empty()) return 0.0;
  // Horner over the dense exponent range, scaled by x^min.
  const int lo = terms_.front().first;
  double acc = 0.0;
  int current = terms_.back().first;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (; current > it->first; --current) acc *= x;
    acc += it->second;
  }
  for (; current > lo; --current) acc *= x;
  return lo == 0 ? acc : acc * std::pow(x, lo);
}

}  // namespace sea
