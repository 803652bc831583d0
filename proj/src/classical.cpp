#include "tfpme/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "tfpme/specfun.hpp"

namespace tfpme {

namespace {

void require_m(double m) {
  if (!(m > 0.0) || !std::isfinite(m)) throw std::domain_error("classical: m must be positive");
}

}  // namespace

double classical_constant(double m) {
  require_m(m);
  const double ratio = specfun::gamma(1.5 + 1.0 / m) * std::sqrt(m) /
                       (std::sqrt(2.0 * std::numbers::pi * (m + 2.0)) * specfun::gamma(1.0 + 1.0 / m));
  return std::pow(ratio, 2.0 * m / (m + 2.0));
}

double classical_profile(double m, double z) {
  const double d = classical_constant(m);
  if (std::abs(z) >= classical_support(m)) return 0.0;
  const double base = d - m * z * z / (2.0 * (2.0 + m));
  return base > 0.0 ? std::pow(base, 1.0 / m) : 0.0;
}

double classical_support(double m) {
  return std::sqrt(2.0 * (2.0 + m) * classical_constant(m) / m);
}

}  // namespace tfpme
