#include "tfpme/reconstruct.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace tfpme {

namespace {

void require_time(double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("time must be positive");
}

}  // namespace

double similarity_exponent(const FractionalParams& params) {
  return params.alpha() / (2.0 + params.m());
}

SpaceTimeSolution::SpaceTimeSolution(Profile profile)
    : profile_(std::move(profile)), exponent_(tfpme::similarity_exponent(profile_.params())) {}

double SpaceTimeSolution::front(double t) const {
  require_time(t);
  return profile_.grid().z0() * std::pow(t, exponent_);
}

double SpaceTimeSolution::evaluate_u(double x, double t) const {
  require_time(t);
  const double scale = std::pow(t, -exponent_);
  const double z = -std::abs(x) * scale;
  if (z < -profile_.grid().z0()) return 0.0;
  return scale * profile_.value_at(z);
}

double SpaceTimeSolution::total_mass(double t) const {
  require_time(t);
  const Grid& grid = profile_.grid();
  const double stretch = std::pow(t, exponent_);
  const std::size_t big_n = grid.n_steps();
  double sum = 0.0;
  for (std::size_t n = 0; n <= big_n; ++n) {
    const double weight = (n == 0 || n == big_n) ? 0.5 : 1.0;
    sum += weight * evaluate_u(grid.node(n) * stretch, t);
  }
  return 2.0 * grid.h() * stretch * sum;
}

double origin_one_sided_slope(const Profile& profile) {
  const std::size_t big_n = profile.grid().n_steps();
  if (big_n < 2) throw std::domain_error("origin_one_sided_slope: need N >= 2");
  const double h = profile.grid().h();
  return std::abs(3.0 * profile[big_n] - 4.0 * profile[big_n - 1] + profile[big_n - 2]) /
         (2.0 * h);
}

}  // namespace tfpme
