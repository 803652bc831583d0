#include "tfpme/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tfpme/errors.hpp"
#include "tfpme/quadrature.hpp"
#include "tfpme/specfun.hpp"

namespace tfpme {

namespace {

void check_triangle(double z, double tau) {
  if (!std::isfinite(z) || !std::isfinite(tau)) {
    throw std::domain_error("kernel: arguments must be finite");
  }
  if (z > 0.0) throw std::domain_error("kernel: z must be <= 0");
  if (tau > z) throw std::domain_error("kernel: tau must be <= z");
}

// Part of the antiderivative left after removing z*tau - c*B*tau^2/2.
double antiderivative_remainder(const FractionalParams& p, double z, double tau) {
  if (z == 0.0) return 0.0;
  const double r = kernel_ratio(p, z, tau);
  if (r == 0.0) return 0.0;
  const double b = p.beta_b();
  const double c = p.slope_factor();
  const double shifted_a = 1.0 - p.B();
  const double elementary = z * tau * std::expm1(b * std::log1p(-r));
  const double tail = z * z * 0.5 * (b - p.B()) * specfun::incomplete_beta_lower(r, shifted_a, b);
  const double head = 0.5 * c * tau * tau * specfun::incomplete_beta_lower(r, p.beta_a(), b);
  return elementary + tail + head;
}

}  // namespace

double kernel_ratio(const FractionalParams& p, double z, double tau) {
  check_triangle(z, tau);
  if (z == 0.0) return 0.0;
  if (z == tau) return 1.0;
  return std::exp(p.ratio_power() * std::log(z / tau));
}

double kernel_exact(const FractionalParams& p, double z, double tau) {
  check_triangle(z, tau);
  if (z == tau) return 0.0;
  const double r = kernel_ratio(p, z, tau);
  const double c = p.slope_factor();
  if (r == 0.0) return z - c * p.kernel_beta() * tau;
  const double b = p.beta_b();
  return z * std::pow(1.0 - r, b) - c * tau * specfun::incomplete_beta_upper(r, p.beta_a(), b);
}

double kernel_quadrature(const FractionalParams& p, double z, double tau, double tol) {
  check_triangle(z, tau);
  if (!(tol > 0.0)) throw std::domain_error("kernel_quadrature: tol must be positive");
  if (z == tau) return 0.0;
  const double alpha = p.alpha();
  const double A = p.A();
  const double B = p.B();
  const double lower = (z == 0.0) ? 0.0 : std::pow(z / tau, (2.0 + p.m()) / alpha);
  const double upper_t = std::pow(1.0 - lower, 1.0 - alpha);
  const auto integrand = [&](double t) {
    const double s = 1.0 - std::pow(t, 1.0 / (1.0 - alpha));
    const double ts = tau * std::pow(s, B);
    return ((A + B) * (z - ts) - B * ts) / (1.0 - alpha);
  };
  const auto result = quadrature::integrate_adaptive(integrand, 0.0, upper_t, tol);
  if (!result.converged) {
    throw NumericalError("kernel_quadrature: tolerance not met (estimate " +
                         std::to_string(result.error_estimate) + ")");
  }
  return result.value;
}

double kernel_z_derivative(const FractionalParams& p, double z, double tau) {
  check_triangle(z, tau);
  if (z == tau) throw std::domain_error("kernel_z_derivative: diverges at tau == z");
  const double r = kernel_ratio(p, z, tau);
  const double alpha = p.alpha();
  return std::pow(1.0 - r, 1.0 - alpha) + r * std::pow(1.0 - r, -alpha);
}

double kernel_lower_bound(const FractionalParams& p, double z, double tau) {
  check_triangle(z, tau);
  const double r = kernel_ratio(p, z, tau);
  return -p.B() * p.kernel_beta() * std::pow(1.0 - r, 1.0 - p.alpha()) * tau;
}

double kernel_upper_bound(const FractionalParams& p, double tau) {
  check_triangle(0.0, tau);
  return -p.slope_factor() * p.kernel_beta() * tau;
}

double kernel_asymptotic_near_boundary(const FractionalParams& p, double z, double tau) {
  check_triangle(z, tau);
  if (z == tau || z == 0.0) return 0.0;
  const double alpha = p.alpha();
  const double two_m = 2.0 + p.m();
  return -alpha / ((1.0 - alpha) * two_m) * z *
         std::pow(two_m / alpha * (1.0 - z / tau), 1.0 - alpha);
}

double kernel_antiderivative(const FractionalParams& p, double z, double tau) {
  check_triangle(z, tau);
  return z * tau - 0.5 * p.slope_factor() * p.kernel_beta() * tau * tau +
         antiderivative_remainder(p, z, tau);
}

double kernel_panel_integral(const FractionalParams& p, double z, double lo, double hi) {
  check_triangle(z, hi);
  if (lo > hi) throw std::domain_error("kernel_panel_integral: lo must be <= hi");
  const double width = hi - lo;
  const double linear = z * width - 0.5 * p.slope_factor() * p.kernel_beta() * width * (hi + lo);
  return linear + antiderivative_remainder(p, z, hi) - antiderivative_remainder(p, z, lo);
}

double kernel_panel_integral_gauss(const FractionalParams& p, double z, double lo, double hi) {
  check_triangle(z, hi);
  if (lo > hi) throw std::domain_error("kernel_panel_integral_gauss: lo must be <= hi");
  if (hi < z) {
    return quadrature::integrate_gl16([&](double tau) { return kernel_exact(p, z, tau); }, lo, hi);
  }
  const double b = 1.0 - p.alpha();
  const double inv_b = 1.0 / b;
  const double s_max = std::pow(z - lo, b);
  const auto integrand = [&](double s) {
    if (s <= 0.0) return 0.0;
    const double tau = std::max(lo, z - std::pow(s, inv_b));
    return kernel_exact(p, z, tau) * std::pow(s, p.alpha() * inv_b) * inv_b;
  };
  return quadrature::integrate_gl16(integrand, 0.0, s_max);
}

}  // namespace tfpme
