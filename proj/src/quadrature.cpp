#include "tfpme/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <queue>

namespace tfpme::quadrature {

namespace {

GaussLegendreRule<16> make_gl16() {
  constexpr std::size_t n = 16;
  GaussLegendreRule<16> rule;
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

// G7K15 abscissae (positive half, Kronrod order) and weights.
constexpr std::array<double, 8> kXk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double value;
  double error;
};

Panel gk15(const std::function<double(double)>& f, double lo, double hi) {
  const double half = 0.5 * (hi - lo);
  const double mid = 0.5 * (hi + lo);
  const double fc = f(mid);
  double kronrod = kWk[7] * fc;
  double gauss = kWg[3] * fc;
  for (std::size_t j = 0; j < 7; ++j) {
    const double dx = half * kXk[j];
    const double fsum = f(mid - dx) + f(mid + dx);
    kronrod += kWk[j] * fsum;
    if (j % 2 == 1) gauss += kWg[j / 2] * fsum;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

const GaussLegendreRule<16>& gauss_legendre16() {
  static const GaussLegendreRule<16> rule = make_gl16();
  return rule;
}

AdaptiveResult integrate_adaptive(const std::function<double(double)>& f, double lo,
                                  double hi, double tol, int max_subdivisions) {
  AdaptiveResult acc;
  if (lo == hi) {
    acc.converged = true;
    return acc;
  }
  struct Interval {
    double lo;
    double hi;
    Panel panel;
    bool operator<(const Interval& other) const { return panel.error < other.panel.error; }
  };
  std::priority_queue<Interval> queue;
  const Panel first = gk15(f, lo, hi);
  queue.push({lo, hi, first});
  double value = first.value;
  double error = first.error;
  for (int split = 0; split < max_subdivisions && error > tol; ++split) {
    const Interval worst = queue.top();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (mid <= worst.lo || mid >= worst.hi) break;
    queue.pop();
    const Panel left = gk15(f, worst.lo, mid);
    const Panel right = gk15(f, mid, worst.hi);
    value += left.value + right.value - worst.panel.value;
    error += left.error + right.error - worst.panel.error;
    queue.push({worst.lo, mid, left});
    queue.push({mid, worst.hi, right});
  }
  // Re-sum to shed the drift of the running updates.
  value = 0.0;
  error = 0.0;
  while (!queue.empty()) {
    value += queue.top().panel.value;
    error += queue.top().panel.error;
    queue.pop();
  }
  acc.value = value;
  acc.error_estimate = error;
  acc.converged = error <= tol;
  return acc;
}

}  // namespace tfpme::quadrature
