#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tfpme/params.hpp"

namespace tfpme {

/// Uniform mesh z_n = -z0 + n h, h = z0 / n_steps, on [-z0, 0].
class Grid {
 public:
  Grid(double z0, std::size_t n_steps);

  double z0() const { return z0_; }
  std::size_t n_steps() const { return n_steps_; }
  double h() const { return h_; }
  /// z_n; node(n_steps()) is exactly 0.
  double node(std::size_t n) const;

 private:
  double z0_;
  std::size_t n_steps_;
  double h_;
};

/// Values U_0..U_N of the self-similar profile on a Grid.
class Profile {
 public:
  Profile(FractionalParams params, Grid grid, std::vector<double> values);

  const FractionalParams& params() const { return params_; }
  const Grid& grid() const { return grid_; }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t n) const { return values_[n]; }
  std::size_t size() const { return values_.size(); }

  /// Piecewise-linear interpolation of U at z; 0 outside [-z0, 0].
  double value_at(double z) const;

 private:
  FractionalParams params_;
  Grid grid_;
  std::vector<double> values_;
};

enum class WeightRule {
  /// Panel integrals from the closed-form antiderivative of K.
  exact,
  /// 16-point Gauss-Legendre per panel on kernel_exact.
  gauss_legendre,
};

/// Product-rectangle weights for a fixed (params, N), stored scale free.
///
/// K is homogeneous of degree one, so on any grid with step h the weights
/// are w_{n,i} = h * unit(n, i), where unit(n, i) is the weight on the grid
/// with h = 1. The normalisation (m+1)/Gamma(1-alpha) is folded in, so that
/// h * sum_i w_{n,i} U_i approximates the full right-hand side raised to the
/// power m+1. Rows are packed lower-triangular: row n holds i = 1..n-1.
class WeightMatrix {
 public:
  static WeightMatrix build(const FractionalParams& params, std::size_t n_steps,
                            WeightRule rule = WeightRule::exact);

  const FractionalParams& params() const { return params_; }
  std::size_t n_steps() const { return n_steps_; }
  WeightRule rule() const { return rule_; }

  /// unit(n, 1..n-1) for 2 <= n <= N (empty for n = 1).
  std::span<const double> unit_row(std::size_t n) const;

 private:
  WeightMatrix(FractionalParams params, std::size_t n_steps, WeightRule rule);

  FractionalParams params_;
  std::size_t n_steps_;
  WeightRule rule_;
  std::vector<double> packed_;
};

/// w_{n,1..n-1} on `grid`, computed directly (no caching). Throws
/// std::out_of_range unless 1 <= n <= N.
std::vector<double> compute_weight_row(const FractionalParams& params, const Grid& grid,
                                       std::size_t n, WeightRule rule = WeightRule::exact);

/// Starting value U_1 taken from the boundary asymptotics of the profile.
double seed_value(const FractionalParams& params, double z0, double h);

/// Explicit recurrence U_n = (h sum_{i<n} w_{n,i} U_i)^(1/(m+1)), U_0 = 0.
Profile solve_profile(const FractionalParams& params, double z0, std::size_t n_steps);

/// Same, reusing precomputed weights (the grid is z0 / weights.n_steps()).
Profile solve_profile(const WeightMatrix& weights, double z0);

/// Upper bound on max U from K <= K(0, tau).
double profile_upper_bound(const FractionalParams& params, double z0);

/// Lower bound on U(z) from K >= K_-.
double profile_lower_bound(const FractionalParams& params, double z0, double z);

/// |D_h - U_N^-m / Gamma(1-alpha) * M_h| where D_h is the second-order
/// backward difference at z = 0 and M_h the trapezoid half-mass. Vanishes
/// with refinement; throws std::domain_error for U_N == 0 or N < 3.
double derivative_origin_residual(const Profile& profile);

}  // namespace tfpme
