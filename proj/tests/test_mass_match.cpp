#include <cmath>
#include <vector>

#include "doctest.h"
#include "tfpme/classical.hpp"
#include "tfpme/errors.hpp"
#include "tfpme/mass_match.hpp"
#include "tfpme/profile.hpp"

using namespace tfpme;

TEST_CASE("discrete half mass") {
  const FractionalParams p(0.5, 1.0);
  CHECK(discrete_half_mass(Profile(p, Grid(2.0, 8), std::vector<double>(9, 0.0))) == 0.0);
  CHECK(discrete_half_mass(Profile(p, Grid(2.0, 8), std::vector<double>(9, 0.75))) == 1.5);
  // trapezoid on a linear profile is exact
  std::vector<double> ramp(11);
  for (std::size_t n = 0; n <= 10; ++n) ramp[n] = 0.1 * static_cast<double>(n);
  CHECK(discrete_half_mass(Profile(p, Grid(1.0, 10), ramp)) == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("mass residual limits and monotonicity") {
  const FractionalParams p(0.5, 1.0);
  CHECK(mass_residual(p, 1e-6, 256) == doctest::Approx(-0.5).epsilon(1e-6));
  CHECK(mass_residual(p, 20.0, 256) > 0.0);
  const auto weights = WeightMatrix::build(p, 256);
  double previous = -1.0;
  for (double z0 = 0.05; z0 < 6.0; z0 *= 1.3) {
    const double f = mass_residual(weights, z0);
    CHECK(f > previous);
    previous = f;
    CHECK(f == mass_residual(p, z0, 256));
  }
}

TEST_CASE("mass growth law") {
  for (const auto& [a, m] : {std::pair{0.5, 1.0}, {0.2, 3.0}, {0.9, 7.0}}) {
    const FractionalParams p(a, m);
    const auto weights = WeightMatrix::build(p, 512);
    for (double z0 : {1.0, 1.7, 3.0}) {
      const double ratio = (mass_residual(weights, 2 * z0) + 0.5) / (mass_residual(weights, z0) + 0.5);
      CHECK(ratio == doctest::Approx(std::pow(2.0, 1.0 + 2.0 / m)).epsilon(0.05));
    }
  }
}

TEST_CASE("support search meets the tolerance and agrees with scale invariance") {
  const FractionalParams p(0.5, 1.0);
  const std::size_t big_n = 512;
  const auto result = find_support(p, big_n);
  CHECK(std::abs(result.residual) < 1e-4);
  CHECK(result.profile.grid().z0() == result.z0_star);
  CHECK(discrete_half_mass(result.profile) == doctest::Approx(0.5).epsilon(2e-4));
  CHECK(result.iterations <= 100);
  CHECK(result.iterations == static_cast<int>(result.bracket_history.size()));
  CHECK(result.monotone);

  // M(z0) = M(1) z0^(1+2/m) exactly for the discrete scheme, so the root is
  // available in closed form from one solve at z0 = 1
  const double m1 = mass_residual(p, 1.0, big_n) + 0.5;
  const double oracle = std::pow(0.5 / m1, 1.0 / (1.0 + 2.0 / p.m()));
  // |F| < 1e-4 moves z0 by at most ~1e-4 / M'(z0)
  CHECK(result.z0_star == doctest::Approx(oracle).epsilon(2e-4));
}

TEST_CASE("support search is deterministic and insensitive to the start") {
  const FractionalParams p(0.3, 2.0);
  const auto a = find_support(p, 256);
  const auto b = find_support(p, 256);
  CHECK(a.z0_star == b.z0_star);
  CHECK(a.iterations == b.iterations);
  SupportSearch far;
  far.z0_init = 40.0;
  const auto c = find_support(p, 256, far);
  CHECK(c.z0_star == doctest::Approx(a.z0_star).epsilon(5e-4));
  far.z0_init = 1e-3;
  CHECK(find_support(p, 256, far).z0_star == doctest::Approx(a.z0_star).epsilon(5e-4));
}

TEST_CASE("support search failures") {
  const FractionalParams p(0.3, 2.0);
  SupportSearch tiny;
  tiny.max_bracket_steps = 1;
  tiny.z0_init = 1e-6;
  CHECK_THROWS_AS(find_support(p, 128, tiny), NumericalError);
  SupportSearch few;
  few.max_bisections = 1;
  few.tol = 1e-14;
  CHECK_THROWS_AS(find_support(p, 128, few), NumericalError);
}

TEST_CASE("near-classical supports") {
  // alpha -> 1 approaches the classical Barenblatt support
  const auto m1 = find_support(FractionalParams(0.999, 1.0), 1024);
  CHECK(m1.z0_star == doctest::Approx(1.654).epsilon(0.02 / 1.654));
  CHECK(m1.iterations <= 100);
  const auto m5 = find_support(FractionalParams(0.999, 5.0), 1024);
  CHECK(m5.z0_star == doctest::Approx(classical_support(5.0)).epsilon(0.01));
}
