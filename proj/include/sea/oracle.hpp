#pragma once

#include <functional>
#include <vector>

namespace sea {

/// Uniform grid of `points` intervals on [x_min, x_max]; Dirichlet at both ends.
struct GridSpec {
  double x_min = 0.0;
  double x_max = 1.0;
  int points = 1000;
};

struct OracleOptions {
  double bisection_tolerance = 1e-10;  // relative
  double richardson_tolerance = 1e-6;
};

/// Lowest `count` eigenvalues of -d^2/dx^2 + v on the three-point stencil,
/// Richardson-extrapolated from grids N and 2N. GridTooCoarse when the
/// extrapolation over 2N and 4N differs by more than the relative tolerance.
std::vector<double> fd_eigenvalues(const std::function<double(double)>& potential,
                                   const GridSpec& grid, int count,
                                   const OracleOptions& options = {});

/// Raw (unextrapolated) eigenvalues on one grid.
std::vector<double> fd_eigenvalues_single(const std::function<double(double)>& potential,
                                          const GridSpec& grid, int count,
                                          double tolerance = 1e-10);

/// l(l+1)/x^2 - 2 lambda/(e^{lambda x} - 1), lambda > 0.
double hulthen_potential(int l, double lambda, double x);

std::vector<double> hulthen_numeric(int l, double lambda, int count, const GridSpec& grid,
                                    const OracleOptions& options = {});
std::vector<double> anharmonic_numeric(double lambda, int count, const GridSpec& grid,
                                       const OracleOptions& options = {});

/// [0, max(200, 40 n^2 / (1 - lambda/lambda_est))] with spacing about `spacing`,
/// lambda_est = 2/n^2.
GridSpec default_radial_grid(int n, double lambda, double spacing = 0.005);
/// [-15, 15].
GridSpec default_anharmonic_grid(int points = 6000);

}  // namespace sea
