#include "sea/bigrational.hpp"

#include <cmath>
#include <sstream>

#include "sea/errors.hpp"

namespace sea {

BigRational::BigRational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::DomainError, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational::BigRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::DomainError, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty rational");
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) { return (!t.empty() && t[0] == '+') ? t.substr(1) : t; };
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
    return BigRational(mpz_class(strip_plus(s)), mpz_class(1));
  }
  std::string num = s.substr(0, slash);
  std::string den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  mpz_class d(den);
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
  return BigRational(mpz_class(strip_plus(num)), d);
}

BigRational BigRational::from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::DomainError, "non-finite double");
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), value);
  return BigRational(q);
}

std::string BigRational::to_string() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string BigRational::to_decimal(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  if (is_zero()) return "0";
  const bool negative = sign() < 0;
  mpz_class num = ::abs(q_.get_num());
  const mpz_class& den = q_.get_den();

  // Find decimal exponent e with 10^e <= |q| < 10^(e+1).
  long e = static_cast<long>(std::floor(std::log10(std::fabs(q_.get_d()))));
  if (!std::isfinite(q_.get_d()) || q_.get_d() == 0.0) {
    e = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
        static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10));
  }
  auto pow10 = [](long p) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(p));
    return r;
  };
  auto digits_for = [&](long exponent) {
    // round(|q| * 10^(sig-1-exponent))
    const long s = significant_digits - 1 - exponent;
    mpz_class n = num, d = den;
    if (s >= 0) n *= pow10(s);
    else d *= pow10(-s);
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (2 * r >= d) q += 1;
    return q;
  };
  mpz_class digits = digits_for(e);
  // Correct the exponent estimate.
  const mpz_class lower = pow10(significant_digits - 1);
  const mpz_class upper = pow10(significant_digits);
  while (digits >= upper) {
    ++e;
    digits = digits_for(e);
  }
  while (digits < lower) {
    --e;
    digits = digits_for(e);
  }
  std::string ds = digits.get_str();
  std::string mantissa = ds.substr(0, 1);
  if (ds.size() > 1) mantissa += "." + ds.substr(1);
  std::ostringstream out;
  if (negative) out << '-';
  if (e >= -5 && e < significant_digits) {
    // Plain positional notation.
    if (e >= 0) {
      std::string intpart = ds.substr(0, static_cast<std::size_t>(e + 1));
      std::string frac = ds.substr(static_cast<std::size_t>(e + 1));
      out << intpart;
      if (!frac.empty()) out << '.' << frac;
    } else {
      out << "0." << std::string(static_cast<std::size_t>(-e - 1), '0') << ds;
    }
  } else {
    out << mantissa << 'e' << (e < 0 ? "-" : "+") << std::labs(e);
  }
  return out.str();
}

BigRational BigRational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DomainError, "inverse of zero");
  return BigRational(mpq_class(1 / q_));
}

BigRational BigRational::pow(unsigned exponent) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), exponent);
  return BigRational(n, d);
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw Error(ErrorCode::DomainError, "division by zero");
  q_ /= o.q_;
  return *this;
}

mpz_class binomial(unsigned n, unsigned m) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, m);
  return r;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace sea
