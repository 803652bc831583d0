#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "tfpme/mass_match.hpp"
#include "tfpme/reconstruct.hpp"
#include "tfpme/table.hpp"

using namespace tfpme;

namespace {

const MassMatchResult& matched() {
  static const MassMatchResult result = find_support(FractionalParams(0.5, 1.0), 512);
  return result;
}

}  // namespace

TEST_CASE("similarity exponent") {
  CHECK(similarity_exponent(FractionalParams(0.5, 2.0)) == 0.125);
  CHECK(similarity_exponent(FractionalParams(0.75, 1.0)) == 0.25);
  CHECK(similarity_exponent(FractionalParams(1.0 - 1e-12, 1e-12)) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("evaluation: support, symmetry, nodes at t = 1") {
  const SpaceTimeSolution sol(matched().profile);
  const Profile& u = sol.profile();
  const double z0 = u.grid().z0();
  CHECK(sol.similarity_exponent() == 0.5 / 3.0);
  for (double t : {0.5, 1.0, 3.0, 10.0}) {
    const double front = sol.front(t);
    CHECK(front == doctest::Approx(z0 * std::pow(t, 0.5 / 3.0)));
    CHECK(sol.evaluate_u(front * 1.0001, t) == 0.0);
    CHECK(sol.evaluate_u(-front * 1.5, t) == 0.0);
    for (double s : {0.05, 0.3, 0.5, 0.99}) {
      CHECK(sol.evaluate_u(s * front, t) == sol.evaluate_u(-s * front, t));
      CHECK(sol.evaluate_u(s * front, t) > 0.0);
    }
  }
  for (std::size_t n = 0; n <= u.grid().n_steps(); ++n) {
    CHECK(sol.evaluate_u(u.grid().node(n), 1.0) == doctest::Approx(u[n]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(sol.evaluate_u(0.0, 0.0), std::domain_error);
  CHECK_THROWS_AS(sol.total_mass(-1.0), std::domain_error);
}

TEST_CASE("self-similar collapse") {
  const SpaceTimeSolution sol(matched().profile);
  const double a = sol.similarity_exponent();
  const double z0 = sol.profile().grid().z0();
  for (double z : {-0.9 * z0, -0.4 * z0, -0.01 * z0, 0.0}) {
    const double t1 = 0.7;
    const double t2 = 42.0;
    const double lhs = std::pow(t1, a) * sol.evaluate_u(z * std::pow(t1, a), t1);
    const double rhs = std::pow(t2, a) * sol.evaluate_u(z * std::pow(t2, a), t2);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("mass is conserved in time") {
  const SpaceTimeSolution sol(matched().profile);
  CHECK(sol.total_mass(1.0) == doctest::Approx(2.0 * discrete_half_mass(sol.profile())).epsilon(1e-13));
  for (double t : {0.5, 1.0, 2.0, 10.0}) CHECK(std::abs(sol.total_mass(t) - 1.0) <= 1e-3);
  const FractionalParams p(0.5, 1.0);
  const SpaceTimeSolution zero(Profile(p, Grid(1.0, 8), std::vector<double>(9, 0.0)));
  CHECK(zero.total_mass(2.0) == 0.0);
}

TEST_CASE("one-sided slope at the origin") {
  const FractionalParams p(0.5, 1.0);
  std::vector<double> ramp(9);
  for (std::size_t n = 0; n <= 8; ++n) ramp[n] = 3.0 * static_cast<double>(n) / 8.0;
  CHECK(origin_one_sided_slope(Profile(p, Grid(1.0, 8), ramp)) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(origin_one_sided_slope(matched().profile) > 0.05);
}

TEST_CASE("profile and space-time tables") {
  const Profile& u = matched().profile;
  const std::size_t big_n = u.grid().n_steps();
  const Table half = profile_table(u, false);
  const Table full = profile_table(u, true);
  CHECK(half.rows.size() == big_n + 1);
  CHECK(full.rows.size() == 2 * big_n + 1);
  CHECK(half.columns == std::vector<std::string>{"z", "U"});
  CHECK(full.rows.front()[0] == -u.grid().z0());
  CHECK(full.rows.back()[0] == u.grid().z0());
  CHECK(full.rows[big_n][0] == 0.0);
  CHECK(full.rows[big_n - 3][1] == full.rows[big_n + 3][1]);

  const std::vector<double> times = {0.5, 2.0};
  const Table st = spacetime_table(SpaceTimeSolution(u), times);
  CHECK(st.columns == std::vector<std::string>{"x", "t", "u"});
  CHECK(st.rows.size() == 2 * (2 * big_n + 1));
}

TEST_CASE("csv round trip is bit exact") {
  Table table = profile_table(matched().profile, true);
  table.add_meta("alpha", 0.5);
  table.add_meta("m", 1.0);
  table.add_meta("z0_star", matched().z0_star);
  table.add_meta("label", "half profile");
  table.rows.push_back({1.0 / 3.0, 1e-300});
  table.rows.push_back({-0.0, 6.02214076e23});
  std::stringstream buffer;
  write_csv(buffer, table);
  CHECK(buffer.str().rfind("# alpha = 0.5\n", 0) == 0);
  const Table back = read_csv(buffer);
  CHECK(back.columns == table.columns);
  CHECK(back.metadata == table.metadata);
  REQUIRE(back.rows.size() == table.rows.size());
  bool identical = true;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    for (std::size_t c = 0; c < 2; ++c) identical = identical && back.rows[r][c] == table.rows[r][c];
  }
  CHECK(identical);
  CHECK(std::stod(back.meta("z0_star")) == matched().z0_star);
  CHECK_THROWS_AS(back.meta("missing"), std::out_of_range);
}

TEST_CASE("csv parse errors") {
  std::stringstream no_header("# a = 1\n");
  CHECK_THROWS_AS(read_csv(no_header), std::runtime_error);
  std::stringstream bad_number("z,U\n1,abc\n");
  CHECK_THROWS_AS(read_csv(bad_number), std::runtime_error);
  std::stringstream short_row("z,U\n1\n");
  CHECK_THROWS_AS(read_csv(short_row), std::runtime_error);
  std::stringstream bad_meta("#nope\nz\n1\n");
  CHECK_THROWS_AS(read_csv(bad_meta), std::runtime_error);
}

TEST_CASE("json layout") {
  Table table = profile_table(matched().profile, false);
  table.add_meta("alpha", 0.5);
  table.add_meta("tool", "tfpme");
  std::stringstream buffer;
  write_json(buffer, table);
  const auto doc = nlohmann::json::parse(buffer.str());
  CHECK(doc["alpha"].get<double>() == 0.5);
  CHECK(doc["tool"].get<std::string>() == "tfpme");
  REQUIRE(doc["U"].size() == table.rows.size());
  bool identical = true;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    identical = identical && doc["z"][r].get<double>() == table.rows[r][0] &&
                doc["U"][r].get<double>() == table.rows[r][1];
  }
  CHECK(identical);
}
