#include "tfpme/profile.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "tfpme/errors.hpp"
#include "tfpme/kernel.hpp"
#include "tfpme/mass_match.hpp"

namespace tfpme {

Grid::Grid(double z0, std::size_t n_steps) : z0_(z0), n_steps_(n_steps) {
  if (!(z0 > 0.0) || !std::isfinite(z0)) throw std::domain_error("grid: z0 must be positive");
  if (n_steps == 0) throw std::domain_error("grid: n_steps must be positive");
  h_ = z0 / static_cast<double>(n_steps);
}

double Grid::node(std::size_t n) const {
  if (n > n_steps_) throw std::out_of_range("grid: node index out of range");
  if (n == n_steps_) return 0.0;
  return -z0_ + static_cast<double>(n) * h_;
}

Profile::Profile(FractionalParams params, Grid grid, std::vector<double> values)
    : params_(params), grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.n_steps() + 1) {
    throw std::invalid_argument("profile: expected N+1 values");
  }
}

double Profile::value_at(double z) const {
  const double z0 = grid_.z0();
  if (z <= -z0 || z > 0.0) return 0.0;
  const double pos = (z + z0) / grid_.h();
  const auto n = static_cast<std::size_t>(pos);
  if (n >= grid_.n_steps()) return values_.back();
  const double frac = pos - static_cast<double>(n);
  return values_[n] + frac * (values_[n + 1] - values_[n]);
}

namespace {

// Unit-grid panel integrals int_{z_i}^{z_{i+1}} K(z_n, tau) dtau, i = 1..n-1,
// with z_k = k - N.
void unit_panel_row(const FractionalParams& p, std::size_t n, std::size_t n_steps,
                    WeightRule rule, std::span<double> out) {
  const double big_n = static_cast<double>(n_steps);
  const double z = static_cast<double>(n) - big_n;
  for (std::size_t i = 1; i < n; ++i) {
    const double lo = static_cast<double>(i) - big_n;
    const double hi = static_cast<double>(i + 1) - big_n;
    out[i - 1] = (rule == WeightRule::exact) ? kernel_panel_integral(p, z, lo, hi)
                                             : kernel_panel_integral_gauss(p, z, lo, hi);
  }
}

}  // namespace

WeightMatrix::WeightMatrix(FractionalParams params, std::size_t n_steps, WeightRule rule)
    : params_(params), n_steps_(n_steps), rule_(rule) {}

WeightMatrix WeightMatrix::build(const FractionalParams& params, std::size_t n_steps,
                                 WeightRule rule) {
  if (n_steps < 2) throw std::domain_error("weights: need at least 2 steps");
  WeightMatrix w(params, n_steps, rule);
  w.packed_.resize((n_steps - 1) * n_steps / 2);
  const double scale = (params.m() + 1.0) / params.gamma_one_minus_alpha();
  for (std::size_t n = 2; n <= n_steps; ++n) {
    const std::size_t offset = (n - 1) * (n - 2) / 2;
    std::span<double> row(w.packed_.data() + offset, n - 1);
    unit_panel_row(params, n, n_steps, rule, row);
    for (double& v : row) v *= scale;
  }
  return w;
}

std::span<const double> WeightMatrix::unit_row(std::size_t n) const {
  if (n < 1 || n > n_steps_) throw std::out_of_range("weights: row index out of range");
  if (n == 1) return {};
  return {packed_.data() + (n - 1) * (n - 2) / 2, n - 1};
}

std::vector<double> compute_weight_row(const FractionalParams& params, const Grid& grid,
                                       std::size_t n, WeightRule rule) {
  if (n < 1 || n > grid.n_steps()) throw std::out_of_range("weights: row index out of range");
  std::vector<double> row(n - 1);
  if (n == 1) return row;
  unit_panel_row(params, n, grid.n_steps(), rule, row);
  const double scale = (params.m() + 1.0) / params.gamma_one_minus_alpha() * grid.h();
  for (double& v : row) v *= scale;
  return row;
}

double seed_value(const FractionalParams& params, double z0, double h) {
  if (!(z0 > 0.0) || !(h > 0.0) || h > z0) {
    throw std::domain_error("seed_value: need 0 < h <= z0");
  }
  const double alpha = params.alpha();
  const double m = params.m();
  const double gamma_2ma = (1.0 - alpha) * params.gamma_one_minus_alpha();
  const double numer = (m + 1.0) * std::pow(z0, alpha) / gamma_2ma * std::pow(params.B(), alpha);
  const double coeff = numer / (1.0 + (2.0 - alpha) / m);
  return std::pow(coeff, 1.0 / m) * std::pow(h, (2.0 - alpha) / m);
}

Profile solve_profile(const FractionalParams& params, double z0, std::size_t n_steps) {
  return solve_profile(WeightMatrix::build(params, n_steps), z0);
}

Profile solve_profile(const WeightMatrix& weights, double z0) {
  const FractionalParams& params = weights.params();
  const Grid grid(z0, weights.n_steps());
  const std::size_t big_n = grid.n_steps();
  const double h2 = grid.h() * grid.h();
  const double root = 1.0 / (params.m() + 1.0);
  std::vector<double> u(big_n + 1, 0.0);
  u[1] = seed_value(params, z0, grid.h());
  for (std::size_t n = 2; n <= big_n; ++n) {
    const auto row = weights.unit_row(n);
    double sum = 0.0;
    for (std::size_t i = 1; i < n; ++i) sum += row[i - 1] * u[i];
    if (sum < 0.0) {
      throw NumericalError("solve_profile: negative partial sum at n = " + std::to_string(n));
    }
    u[n] = std::pow(h2 * sum, root);
  }
  return Profile(params, grid, std::move(u));
}

double profile_upper_bound(const FractionalParams& params, double z0) {
  if (!(z0 > 0.0)) throw std::domain_error("profile_upper_bound: z0 must be positive");
  const double m = params.m();
  const double inner = (m + 1.0) / params.gamma_one_minus_alpha() * params.slope_factor() *
                       params.kernel_beta() * z0 * z0 / 2.0;
  return std::pow(inner, 1.0 / m);
}

double profile_lower_bound(const FractionalParams& params, double z0, double z) {
  if (!(z0 > 0.0)) throw std::domain_error("profile_lower_bound: z0 must be positive");
  if (z < -z0 || z > 0.0) throw std::domain_error("profile_lower_bound: z outside [-z0, 0]");
  const double alpha = params.alpha();
  const double m = params.m();
  const double coeff = alpha * (1.0 + m) / ((2.0 + m) * params.gamma_one_minus_alpha()) *
                       params.kernel_beta() * std::pow(z0, alpha);
  return std::pow(coeff, 1.0 / m) * std::pow(z0 + z, (2.0 - alpha) / m);
}

double derivative_origin_residual(const Profile& profile) {
  const std::size_t big_n = profile.grid().n_steps();
  if (big_n < 3) throw std::domain_error("derivative_origin_residual: need N >= 3");
  const double u_end = profile[big_n];
  if (!(u_end > 0.0)) throw std::domain_error("derivative_origin_residual: trivial profile");
  const double h = profile.grid().h();
  const double slope = (3.0 * u_end - 4.0 * profile[big_n - 1] + profile[big_n - 2]) / (2.0 * h);
  const double reference = std::pow(u_end, -profile.params().m()) /
                           profile.params().gamma_one_minus_alpha() * discrete_half_mass(profile);
  return std::abs(slope - reference);
}

}  // namespace tfpme
