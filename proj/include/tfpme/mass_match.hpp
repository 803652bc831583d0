#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "tfpme/params.hpp"
#include "tfpme/profile.hpp"

namespace tfpme {

/// Trapezoid rule h (U_0/2 + U_1 + ... + U_{N-1} + U_N/2).
double discrete_half_mass(const Profile& profile);

/// F(z0) = discrete_half_mass(solve_profile(params, z0, N)) - 1/2.
double mass_residual(const FractionalParams& params, double z0, std::size_t n_steps);
double mass_residual(const WeightMatrix& weights, double z0);

struct MassMatchResult {
  double z0_star;
  Profile profile;
  double residual;
  /// Number of residual evaluations (bracketing plus bisection).
  int iterations;
  /// Every (z0, F(z0)) evaluated, in evaluation order.
  std::vector<std::pair<double, double>> bracket_history;
  /// False if the sampled F was not increasing in z0. Reported only.
  bool monotone;
};

struct SupportSearch {
  double tol = 1e-4;
  double z0_init = 1.0;
  int max_bracket_steps = 60;
  int max_bisections = 200;
};

/// Support half-width z0* with |F(z0*)| < tol. The bracket is grown from
/// z0_init by doubling or halving until F changes sign, then bisected.
/// Throws NumericalError if no bracket or no convergence is found.
MassMatchResult find_support(const FractionalParams& params, std::size_t n_steps,
                             const SupportSearch& search = {});
MassMatchResult find_support(const WeightMatrix& weights, const SupportSearch& search = {});

}  // namespace tfpme
