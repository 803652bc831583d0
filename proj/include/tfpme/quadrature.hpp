#pragma once

#include <array>
#include <cstddef>
#include <functional>

namespace tfpme::quadrature {

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
template <std::size_t N>
struct GaussLegendreRule {
  std::array<double, N> nodes{};
  std::array<double, N> weights{};
};

/// 16-point rule, computed once by Newton iteration on P_16.
const GaussLegendreRule<16>& gauss_legendre16();

/// Fixed 16-point Gauss-Legendre approximation of int_lo^hi f.
template <class F>
double integrate_gl16(F&& f, double lo, double hi) {
  const auto& rule = gauss_legendre16();
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  double sum = 0.0;
  for (std::size_t k = 0; k < 16; ++k) {
    sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
  }
  return half * sum;
}

struct AdaptiveResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = false;
};

/// Globally adaptive Gauss-Kronrod (7/15) quadrature: the interval with the
/// largest Kronrod/Gauss discrepancy is bisected until the summed estimate
/// drops below `tol` or `max_subdivisions` bisections have been spent.
AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double lo,
                                  double hi, double tol, int max_subdivisions = 60);

}  // namespace tfpme::quadrature
