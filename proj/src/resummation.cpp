#include "sea/resummation.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>

#include "sea/errors.hpp"

namespace sea {

namespace {

const BigRational& coeff_or_zero(std::span<const BigRational> series, int i) {
  static const BigRational zero;
  return (i < 0 || i >= static_cast<int>(series.size())) ? zero
                                                         : series[static_cast<std::size_t>(i)];
}

/// Solves A q = rhs exactly by Gaussian elimination; false if singular.
bool solve_exact(std::vector<std::vector<BigRational>>& a, std::vector<BigRational>& rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    const BigRational inv = a[col][col].inverse();
    for (std::size_t row = col + 1; row < n; ++row) {
      if (a[row][col].is_zero()) continue;
      const BigRational f = a[row][col] * inv;
      for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
      rhs[row] -= f * rhs[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    BigRational s = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * rhs[j];
    rhs[i] = s / a[i][i];
  }
  return true;
}

struct Signs {
  double p;
  double q;
};

Signs eval_parts(const PadeApproximant& p, double x) {
  double num = 0.0, den = 0.0;
  for (auto it = p.numerator.rbegin(); it != p.numerator.rend(); ++it) num = num * x + it->to_double();
  for (auto it = p.denominator.rbegin(); it != p.denominator.rend(); ++it) den = den * x + it->to_double();
  return {num, den};
}

int sgn(double v) { return (v > 0) - (v < 0); }

struct RootSearch {
  bool found = false;
  double root = 0.0;
  double bracket_hi = 0.0;
  std::vector<double> poles;  // midpoints of denominator sign changes
};

/// First zero crossing of numerator/denominator on (0, upper] away from poles,
/// refined by exact bisection.
RootSearch find_first_root(const PadeApproximant& p, double upper, const CriticalOptions& opt) {
  RootSearch out;
  const int g = opt.grid_points;
  double prev_x = 0.0;
  Signs prev = eval_parts(p, 0.0);
  double lo_x = 0.0, hi_x = 0.0;
  for (int i = 1; i <= g; ++i) {
    const double x = upper * i / g;
    const Signs cur = eval_parts(p, x);
    if (sgn(cur.q) != sgn(prev.q)) {
      out.poles.push_back(0.5 * (prev_x + x));
    } else if (!out.found && sgn(cur.p) != sgn(prev.p) && sgn(prev.p) != 0) {
      out.found = true;
      lo_x = prev_x;
      hi_x = x;
    }
    prev = cur;
    prev_x = x;
  }
  if (!out.found) return out;

  BigRational lo = BigRational::from_double(lo_x);
  BigRational hi = BigRational::from_double(hi_x);
  auto value_sign = [&](const BigRational& x) {
    auto [sp, sq] = pade_signs(p, x);
    return sp * sq;
  };
  const int lo_sign = value_sign(lo);
  const BigRational tol = BigRational::from_double(opt.interval_tolerance);
  const BigRational half(1, 2);
  while (hi - lo >= tol) {
    BigRational mid = (lo + hi) * half;
    const int s = value_sign(mid);
    if (s == 0) {
      lo = hi = mid;
      break;
    }
    if (s == lo_sign) lo = std::move(mid);
    else hi = std::move(mid);
  }
  out.root = ((lo + hi) * half).to_double();
  out.bracket_hi = hi_x;
  return out;
}

}  // namespace

PadeOrder parse_pade_order(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) throw std::invalid_argument("no slash");
    std::size_t used_m = 0, used_n = 0;
    const std::string ms = text.substr(0, slash), ns = text.substr(slash + 1);
    const int m = std::stoi(ms, &used_m);
    const int n = std::stoi(ns, &used_n);
    if (used_m != ms.size() || used_n != ns.size() || m < 0 || n < 0)
      throw std::invalid_argument("bad");
    return PadeOrder{m, n};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "bad Pade order '" + text + "', expected m/n");
  }
}

std::string to_string(const PadeOrder& order) {
  return std::to_string(order.m) + "/" + std::to_string(order.n);
}

PadeApproximant pade(std::span<const BigRational> series, int m, int n) {
  if (m < 0 || n < 0 || static_cast<int>(series.size()) < m + n + 1)
    throw Error(ErrorCode::OrderExceeded, "Pade [" + std::to_string(m) + "/" +
                                              std::to_string(n) + "] needs " +
                                              std::to_string(m + n + 1) + " coefficients");
  PadeApproximant out;
  out.m = m;
  out.n = n;
  out.denominator.assign(static_cast<std::size_t>(n) + 1, BigRational());
  out.denominator[0] = BigRational(1);
  if (n > 0) {
    // sum_{j=1}^{n} q_j c_{i-j} = -c_i for i = m+1..m+n.
    std::vector<std::vector<BigRational>> a(static_cast<std::size_t>(n),
                                            std::vector<BigRational>(static_cast<std::size_t>(n)));
    std::vector<BigRational> rhs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            coeff_or_zero(series, m + i - j);
      rhs[static_cast<std::size_t>(i)] = -coeff_or_zero(series, m + 1 + i);
    }
    if (!solve_exact(a, rhs))
      throw Error(ErrorCode::SingularPadeSystem,
                  "singular [" + std::to_string(m) + "/" + std::to_string(n) + "] system");
    for (int j = 1; j <= n; ++j)
      out.denominator[static_cast<std::size_t>(j)] = rhs[static_cast<std::size_t>(j - 1)];
  }
  out.numerator.assign(static_cast<std::size_t>(m) + 1, BigRational());
  for (int i = 0; i <= m; ++i) {
    BigRational s;
    for (int j = 0; j <= std::min(i, n); ++j)
      s += out.denominator[static_cast<std::size_t>(j)] * coeff_or_zero(series, i - j);
    out.numerator[static_cast<std::size_t>(i)] = s;
  }
  const auto check = taylor_coefficients(out, m + n);
  for (int i = 0; i <= m + n; ++i)
    if (check[static_cast<std::size_t>(i)] != series[static_cast<std::size_t>(i)])
      throw Error(ErrorCode::SingularPadeSystem, "approximant does not reproduce the series");
  return out;
}

PadeApproximant pade_reducing(std::span<const BigRational> series, int m, int n) {
  for (int nn = n; nn >= 0; --nn) {
    try {
      return pade(series, m, nn);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SingularPadeSystem || nn == 0) throw;
    }
  }
  throw Error(ErrorCode::SingularPadeSystem, "no nonsingular approximant");
}

std::vector<BigRational> taylor_coefficients(const PadeApproximant& p, int order) {
  std::vector<BigRational> t(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) {
    BigRational s = i <= p.m ? p.numerator[static_cast<std::size_t>(i)] : BigRational();
    for (int j = 1; j <= std::min(i, p.n); ++j)
      s -= p.denominator[static_cast<std::size_t>(j)] * t[static_cast<std::size_t>(i - j)];
    t[static_cast<std::size_t>(i)] = s;  // denominator[0] == 1
  }
  return t;
}

double pade_eval(const PadeApproximant& p, double lambda) {
  const Signs v = eval_parts(p, lambda);
  double scale = 0.0, power = 1.0;
  for (const auto& q : p.denominator) {
    scale += std::fabs(q.to_double()) * power;
    power *= std::fabs(lambda);
  }
  if (std::fabs(v.q) < 1e-12 * scale)
    throw Error(ErrorCode::PoleProximity, "denominator vanishes near lambda = " +
                                              std::to_string(lambda));
  return v.p / v.q;
}

std::pair<int, int> pade_signs(const PadeApproximant& p, const BigRational& lambda) {
  auto horner = [&](const std::vector<BigRational>& c) {
    mpq_class acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * lambda.raw() + it->raw();
    return sgn(acc);
  };
  return {horner(p.numerator), horner(p.denominator)};
}

CriticalLambda critical_lambda(const EnergySeries& series, PadeOrder first, PadeOrder second,
                               const CriticalOptions& options) {
  CriticalLambda out;
  out.n = series.n;
  out.l = series.l;
  const int n = series.n;
  if (series.family != "hulthen" || n < 1)
    throw Error(ErrorCode::InvalidFamily, "critical lambda is defined for Hulthen levels");
  const double upper = 2.0 / (static_cast<double>(n) * n);
  if (series.l == 0) {
    out.lambda_c = out.root_first = out.root_second = upper;
    out.pade_used = "closed-form";
    return out;
  }

  std::ostringstream used;
  double roots[2] = {0.0, 0.0};
  const PadeOrder orders[2] = {first, second};
  for (int which = 0; which < 2; ++which) {
    PadeOrder order = orders[which];
    if (series.order() < order.m + order.n)
      throw Error(ErrorCode::OrderExceeded, "series too short for [" + to_string(order) + "]");
    while (true) {
      PadeApproximant p = pade_reducing(series.coeffs.coeffs(), order.m, order.n);
      if (p.n != order.n)
        out.events.push_back("[" + to_string(order) + "] singular, reduced to [" +
                             to_string(PadeOrder{p.m, p.n}) + "]");
      const RootSearch search = find_first_root(p, upper, options);
      if (!search.found)
        throw Error(ErrorCode::NoSignChange, "no zero crossing of [" +
                                                 to_string(PadeOrder{p.m, p.n}) + "] on (0, " +
                                                 std::to_string(upper) + "]");
      bool spurious = false;
      for (double pole : search.poles)
        if (pole < search.bracket_hi && std::fabs(pole - search.root) < options.pole_margin)
          spurious = true;
      if (spurious && p.n > 0) {
        out.events.push_back("[" + to_string(PadeOrder{p.m, p.n}) +
                             "] has a pole near the root, retrying with n-1");
        order = PadeOrder{p.m, p.n - 1};
        continue;
      }
      roots[which] = search.root;
      if (which == 1) used << ",";
      used << "[" << to_string(PadeOrder{p.m, p.n}) << "]";
      out.approximants.push_back(std::move(p));
      break;
    }
  }
  out.root_first = roots[0];
  out.root_second = roots[1];
  out.lambda_c = 0.5 * (roots[0] + roots[1]);
  out.uncertainty = 0.5 * std::fabs(roots[0] - roots[1]);
  out.pade_used = used.str();
  return out;
}

CriticalLambda critical_lambda(int n, int l, int series_order, PadeOrder first, PadeOrder second,
                               const CriticalOptions& options) {
  return critical_lambda(hulthen_energy_series(n, l, series_order), first, second, options);
}

Reconstruction reconstruct_energy(const EnergySeries& series, double lambda, PadeOrder first,
                                  PadeOrder second) {
  for (const PadeOrder& o : {first, second})
    if (series.order() < o.m + o.n)
      throw Error(ErrorCode::OrderExceeded, "series too short for [" + to_string(o) + "]");
  Reconstruction out;
  out.first = pade_reducing(series.coeffs.coeffs(), first.m, first.n);
  out.second = pade_reducing(series.coeffs.coeffs(), second.m, second.n);
  out.value = pade_eval(out.first, lambda);
  out.uncertainty = std::fabs(out.value - pade_eval(out.second, lambda));
  return out;
}

double pade_value_numeric(std::span<const double> series, int m, int n, double lambda) {
  if (static_cast<int>(series.size()) < m + n + 1)
    throw Error(ErrorCode::OrderExceeded, "series too short for numeric Pade");
  auto c = [&](int i) { return i < 0 ? 0.0 : series[static_cast<std::size_t>(i)]; };
  Eigen::VectorXd q = Eigen::VectorXd::Zero(n + 1);
  q(0) = 1.0;
  if (n > 0) {
    Eigen::MatrixXd a(n, n);
    Eigen::VectorXd rhs(n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a(i, j) = c(m + i - j);
      rhs(i) = -c(m + 1 + i);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (lu.rank() < n) throw Error(ErrorCode::SingularPadeSystem, "singular numeric Pade system");
    q.tail(n) = lu.solve(rhs);
  }
  double num = 0.0, den = 0.0;
  for (int i = m; i >= 0; --i) {
    double pi = 0.0;
    for (int j = 0; j <= std::min(i, n); ++j) pi += q(j) * c(i - j);
    num = num * lambda + pi;
  }
  for (int j = n; j >= 0; --j) den = den * lambda + q(j);
  return num / den;
}

}  // namespace sea
