#include "sea/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sea/errors.hpp"

namespace sea {

namespace {

struct Tridiagonal {
  std::vector<double> diag;
  double off_sq = 0.0;
};

Tridiagonal assemble(const std::function<double(double)>& potential, const GridSpec& grid) {
  if (grid.points < 3 || !(grid.x_min < grid.x_max))
    throw Error(ErrorCode::DomainError, "grid needs N >= 3 and x_min < x_max");
  const double h = (grid.x_max - grid.x_min) / grid.points;
  Tridiagonal t;
  t.diag.resize(static_cast<std::size_t>(grid.points) - 1);
  const double kinetic = 2.0 / (h * h);
  for (int i = 1; i < grid.points; ++i) {
    const double v = potential(grid.x_min + i * h);
    if (!std::isfinite(v))
      throw Error(ErrorCode::DomainError, "potential is not finite at an interior node");
    t.diag[static_cast<std::size_t>(i) - 1] = kinetic + v;
  }
  t.off_sq = 1.0 / (h * h * h * h);
  return t;
}

/// Number of eigenvalues below sigma (Sturm sequence via LDL^T pivots).
int count_below(const Tridiagonal& t, double sigma) {
  int count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < t.diag.size(); ++i) {
    d = (t.diag[i] - sigma) - (i == 0 ? 0.0 : t.off_sq / d);
    if (d == 0.0) d = -std::numeric_limits<double>::min();
    if (d < 0.0) ++count;
  }
  return count;
}

}  // namespace

std::vector<double> fd_eigenvalues_single(const std::function<double(double)>& potential,
                                          const GridSpec& grid, int count, double tolerance) {
  const Tridiagonal t = assemble(potential, grid);
  if (count < 1 || count > static_cast<int>(t.diag.size()))
    throw Error(ErrorCode::DomainError, "eigenvalue count out of range");
  const double off = std::sqrt(t.off_sq);
  const double lower = *std::min_element(t.diag.begin(), t.diag.end()) - 2.0 * off;
  const double upper = *std::max_element(t.diag.begin(), t.diag.end()) + 2.0 * off;
  std::vector<double> out;
  double lo = lower;
  for (int k = 0; k < count; ++k) {
    double a = lo, b = upper;
    // shrink the upper end quickly: eigenvalue k is usually far below the top
    for (double step = std::max(1.0, std::fabs(a)); a + step < b; step *= 2.0) {
      if (count_below(t, a + step) > k) {
        b = a + step;
        break;
      }
    }
    while (b - a > tolerance * std::max(std::fabs(a + b) * 0.5, 1e-300) && b - a > 1e-15) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (count_below(t, mid) > k) b = mid;
      else a = mid;
    }
    out.push_back(0.5 * (a + b));
    lo = a;
  }
  return out;
}

std::vector<double> fd_eigenvalues(const std::function<double(double)>& potential,
                                   const GridSpec& grid, int count, const OracleOptions& options) {
  std::vector<std::vector<double>> raw;
  GridSpec g = grid;
  for (int level = 0; level < 3; ++level, g.points *= 2)
    raw.push_back(fd_eigenvalues_single(potential, g, count, options.bisection_tolerance));
  std::vector<double> out(raw[0].size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (4.0 * raw[1][i] - raw[0][i]) / 3.0;
    const double refined = (4.0 * raw[2][i] - raw[1][i]) / 3.0;
    const double change = std::fabs(refined - out[i]);
    if (change > options.richardson_tolerance * std::fabs(out[i]))
      throw Error(ErrorCode::GridTooCoarse,
                  "extrapolated eigenvalue " + std::to_string(i) + " moves by " +
                      std::to_string(change) + " when N = " + std::to_string(grid.points) +
                      " is doubled");
  }
  return out;
}

double hulthen_potential(int l, double lambda, double x) {
  return l * (l + 1.0) / (x * x) - 2.0 * lambda / std::expm1(lambda * x);
}

std::vector<double> hulthen_numeric(int l, double lambda, int count, const GridSpec& grid,
                                    const OracleOptions& options) {
  if (!(lambda > 0.0)) throw Error(ErrorCode::DomainError, "Hulthen oracle needs lambda > 0");
  if (l < 0) throw Error(ErrorCode::DomainError, "l must be non-negative");
  if (grid.x_min != 0.0) throw Error(ErrorCode::DomainError, "radial grid must start at 0");
  return fd_eigenvalues([=](double x) { return hulthen_potential(l, lambda, x); }, grid, count,
                        options);
}

std::vector<double> anharmonic_numeric(double lambda, int count, const GridSpec& grid,
                                       const OracleOptions& options) {
  if (lambda < 0.0) throw Error(ErrorCode::DomainError, "anharmonic oracle needs lambda >= 0");
  return fd_eigenvalues([=](double x) { return x * x + lambda * x * x * x * x; }, grid, count,
                        options);
}

GridSpec default_radial_grid(int n, double lambda, double spacing) {
  const double n2 = static_cast<double>(n) * n;
  const double headroom = std::max(1.0 - lambda * n2 / 2.0, 0.05);
  GridSpec g;
  g.x_min = 0.0;
  g.x_max = std::max(200.0, 40.0 * n2 / headroom);
  g.points = static_cast<int>(std::ceil(g.x_max / spacing));
  return g;
}

GridSpec default_anharmonic_grid(int points) { return GridSpec{-15.0, 15.0, points}; }

}  // namespace sea
