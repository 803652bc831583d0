#pragma once

#include <cstddef>

#include "tfpme/params.hpp"
#include "tfpme/profile.hpp"

namespace tfpme {

/// Grid-extrapolation estimate of the empirical convergence order.
struct OrderReport {
  FractionalParams params;
  double z0;
  std::size_t base_n;
  /// max_n |U^(N)_n - U^(2N)_2n|
  double diff_coarse;
  /// max_n |U^(2N)_n - U^(4N)_2n|
  double diff_fine;
  /// log2(diff_coarse / diff_fine)
  double p_estimate;
  /// Same estimate restricted to nodes with z >= -(1 - interior_skip) z0,
  /// i.e. away from the boundary layer. Diagnostic only.
  double p_interior;
};

/// Fraction of the support next to -z0 left out of p_interior.
inline constexpr double interior_skip = 0.1;

/// max over coarse nodes n >= first_node of |coarse_n - fine_2n|. Throws
/// std::invalid_argument unless the profiles share params and z0 and the
/// fine grid has exactly twice the steps.
double shared_node_difference(const Profile& coarse, const Profile& fine, std::size_t first_node = 0);

/// Solves at N, 2N and 4N with the same z0 and compares shared nodes.
/// Throws NumericalError if the fine difference vanishes.
OrderReport estimate_order(const FractionalParams& params, double z0, std::size_t base_n);

/// As above with z0 taken as the mass-matched z0* at N = base_n (tol 1e-4).
OrderReport estimate_order(const FractionalParams& params, std::size_t base_n);

}  // namespace tfpme
