// tfpme: command-line front end for the self-similar profile solver.
//
// Exit codes: 0 success, 1 invalid input, 2 numerical failure, 3 I/O error.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tfpme/classical.hpp"
#include "tfpme/errors.hpp"
#include "tfpme/mass_match.hpp"
#include "tfpme/order.hpp"
#include "tfpme/profile.hpp"
#include "tfpme/reconstruct.hpp"
#include "tfpme/table.hpp"

namespace {

enum Exit { kOk = 0, kInvalid = 1, kNumerical = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  double alpha = 0.5;
  double m = 1.0;
  double z0 = 0.0;  // 0 = not given
  double z0_init = 1.0;
  std::size_t steps = 1024;
  double tol = 1e-4;
  std::vector<double> times = {1.0};
  std::string out;
  std::string format = "csv";
  std::string rule = "exact";
  bool grid = false;
};

const char* kNormalization =
    "w_ni = (m+1)/(Gamma(1-alpha) h) int_{z_i}^{z_{i+1}} K(z_n,tau) dtau, i=1..n-1; "
    "U_n = (h sum_i w_ni U_i)^(1/(m+1))";

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

void validate(const Config& c) {
  require(c.alpha > 0.0 && c.alpha < 1.0, "--alpha must lie in (0, 1)");
  require(c.m > 0.0 && std::isfinite(c.m), "--m must be positive");
  require(c.steps >= 2, "--steps must be at least 2");
  require(c.tol > 0.0 && std::isfinite(c.tol), "--tol must be positive");
  require(c.z0 >= 0.0 && std::isfinite(c.z0), "--z0 must be positive");
  require(c.z0_init > 0.0 && std::isfinite(c.z0_init), "--z0-init must be positive");
  for (double t : c.times) require(t > 0.0 && std::isfinite(t), "--times must be positive");
}

tfpme::WeightRule rule_of(const Config& c) {
  return c.rule == "gauss-legendre" ? tfpme::WeightRule::gauss_legendre : tfpme::WeightRule::exact;
}

void add_common_meta(tfpme::Table& table, const std::string& command, const Config& c) {
  table.add_meta("command", command);
  table.add_meta("tool_version", std::string("tfpme ") + TFPME_VERSION);
  table.add_meta("weight_normalization", kNormalization);
  table.add_meta("weight_rule", c.rule);
  table.add_meta("alpha", c.alpha);
  table.add_meta("m", c.m);
  table.add_meta("N", static_cast<double>(c.steps));
  table.add_meta("tol", c.tol);
}

void emit(const tfpme::Table& table, const Config& c) {
  std::ostringstream text;
  if (c.format == "json") {
    tfpme::write_json(text, table);
  } else {
    tfpme::write_csv(text, table);
  }
  if (c.out.empty()) {
    std::cout << text.str();
    return;
  }
  std::ofstream file(c.out, std::ios::binary);
  if (!file) throw IoError("cannot open output file '" + c.out + "'");
  file << text.str();
  file.close();
  if (!file) throw IoError("failed writing output file '" + c.out + "'");
}

tfpme::MassMatchResult match(const Config& c) {
  tfpme::SupportSearch search;
  search.tol = c.tol;
  search.z0_init = c.z0_init;
  const auto weights = tfpme::WeightMatrix::build(tfpme::FractionalParams(c.alpha, c.m), c.steps, rule_of(c));
  auto result = tfpme::find_support(weights, search);
  std::cerr << "z0* = " << tfpme::format_number(result.z0_star)
            << "  residual = " << tfpme::format_number(result.residual)
            << "  iterations = " << result.iterations << '\n';
  if (!result.monotone) std::cerr << "warning: sampled mass residual was not increasing in z0\n";
  return result;
}

void add_match_meta(tfpme::Table& table, const tfpme::MassMatchResult& r) {
  table.add_meta("z0_star", r.z0_star);
  table.add_meta("residual", r.residual);
  table.add_meta("iterations", static_cast<double>(r.iterations));
  table.add_meta("monotone", r.monotone ? "true" : "false");
}

void cmd_solve(const Config& c) {
  require(c.z0 > 0.0, "solve needs --z0");
  const auto weights = tfpme::WeightMatrix::build(tfpme::FractionalParams(c.alpha, c.m), c.steps, rule_of(c));
  const tfpme::Profile profile = tfpme::solve_profile(weights, c.z0);
  tfpme::Table table = tfpme::profile_table(profile, false);
  add_common_meta(table, "solve", c);
  table.add_meta("z0", c.z0);
  table.add_meta("half_mass", tfpme::discrete_half_mass(profile));
  emit(table, c);
}

void cmd_mass_match(const Config& c, bool reflected) {
  const auto result = match(c);
  tfpme::Table table = tfpme::profile_table(result.profile, reflected);
  add_common_meta(table, "mass-match", c);
  table.add_meta("z0_init", c.z0_init);
  add_match_meta(table, result);
  emit(table, c);
}

void cmd_reconstruct(const Config& c) {
  const auto result = match(c);
  const tfpme::SpaceTimeSolution solution(result.profile);
  tfpme::Table table = tfpme::spacetime_table(solution, c.times);
  add_common_meta(table, "reconstruct", c);
  table.add_meta("z0_init", c.z0_init);
  add_match_meta(table, result);
  table.add_meta("similarity_exponent", solution.similarity_exponent());
  for (double t : c.times) {
    table.add_meta("total_mass(t=" + tfpme::format_number(t) + ")", solution.total_mass(t));
  }
  emit(table, c);
}

void cmd_order(const Config& c, bool steps_given) {
  const std::size_t base = steps_given ? c.steps : 2048;
  std::vector<std::pair<double, double>> cells;
  if (c.grid) {
    for (double a : {0.999, 0.9, 0.5, 0.2, 0.01}) {
      for (double m : {1.0, 3.0, 5.0, 7.0, 9.0}) cells.emplace_back(a, m);
    }
  } else {
    cells.emplace_back(c.alpha, c.m);
  }
  tfpme::Table table;
  table.columns = {"alpha", "m", "N", "z0", "diff_coarse", "diff_fine", "p", "p_interior"};
  for (const auto& [a, m] : cells) {
    const tfpme::FractionalParams params(a, m);
    const tfpme::OrderReport r = c.z0 > 0.0 ? tfpme::estimate_order(params, c.z0, base)
                                            : tfpme::estimate_order(params, base);
    std::cerr << "alpha = " << a << "  m = " << m << "  p = " << r.p_estimate << '\n';
    table.rows.push_back(
        {a, m, static_cast<double>(base), r.z0, r.diff_coarse, r.diff_fine, r.p_estimate, r.p_interior});
  }
  Config shown = c;
  shown.steps = base;
  add_common_meta(table, "order", shown);
  table.add_meta("z0_choice", c.z0 > 0.0 ? "fixed --z0" : "mass-matched at base N");
  table.add_meta("grid", c.grid ? "true" : "false");
  table.add_meta("p_interior", "same estimate over nodes with z >= -0.9 z0 (boundary layer excluded)");
  emit(table, c);
}

void cmd_classical_compare(const Config& c) {
  const auto result = match(c);
  const tfpme::Profile& u = result.profile;
  tfpme::Table table;
  table.columns = {"z", "U", "U_classical", "abs_error"};
  double worst = 0.0;
  for (std::size_t n = 0; n <= u.grid().n_steps(); ++n) {
    const double z = u.grid().node(n);
    const double exact = tfpme::classical_profile(c.m, z);
    const double err = std::abs(u[n] - exact);
    worst = std::max(worst, err);
    table.rows.push_back({z, u[n], exact, err});
  }
  add_common_meta(table, "classical-compare", c);
  table.add_meta("z0_init", c.z0_init);
  add_match_meta(table, result);
  table.add_meta("z0_classical", tfpme::classical_support(c.m));
  table.add_meta("max_abs_error", worst);
  std::cerr << "max |U - U_classical| = " << tfpme::format_number(worst)
            << "  z0* = " << tfpme::format_number(result.z0_star)
            << "  classical z0 = " << tfpme::format_number(tfpme::classical_support(c.m)) << '\n';
  emit(table, c);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-similar solutions of the time-fractional porous medium equation"};
  app.set_version_flag("--version", std::string("tfpme ") + TFPME_VERSION);
  app.require_subcommand(1);

  Config c;
  const auto common = [&c](CLI::App* sub) {
    sub->add_option("--alpha", c.alpha, "fractional order, 0 < alpha < 1");
    sub->add_option("--m", c.m, "nonlinearity exponent, m > 0");
    sub->add_option("--steps,-N", c.steps, "number of grid steps N");
    sub->add_option("--out,-o", c.out, "output file (default stdout)");
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--rule", c.rule, "panel weights")->check(CLI::IsMember({"exact", "gauss-legendre"}));
  };
  const auto matching = [&c](CLI::App* sub) {
    sub->add_option("--z0-init", c.z0_init, "starting guess for the support half-width");
    sub->add_option("--tol", c.tol, "absolute tolerance on the half-mass residual");
  };

  auto* solve = app.add_subcommand("solve", "solve the profile for a given z0");
  common(solve);
  solve->add_option("--z0", c.z0, "support half-width")->required();

  bool reflected = false;
  auto* mass = app.add_subcommand("mass-match", "find z0* with unit mass and write the profile");
  common(mass);
  matching(mass);
  mass->add_flag("--reflected", reflected, "write the even profile on [-z0, z0]");

  auto* recon = app.add_subcommand("reconstruct", "mass-match, then tabulate u(x, t)");
  common(recon);
  matching(recon);
  recon->add_option("--times", c.times, "list of times t > 0")->delimiter(',');

  auto* order = app.add_subcommand("order", "grid-extrapolation estimate of the convergence order");
  common(order);
  order->add_option("--z0", c.z0, "fixed z0 (default: mass-matched at base N)");
  order->add_flag("--grid", c.grid, "all 25 cells alpha x m = {0.999,0.9,0.5,0.2,0.01} x {1,3,5,7,9}");

  auto* classical = app.add_subcommand("classical-compare", "compare alpha -> 1 with the classical profile");
  common(classical);
  matching(classical);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  if (*classical && classical->count("--alpha") == 0) c.alpha = 0.999;

  try {
    validate(c);
    if (*solve) cmd_solve(c);
    if (*mass) cmd_mass_match(c, reflected);
    if (*recon) cmd_reconstruct(c);
    if (*order) cmd_order(c, order->count("--steps") > 0);
    if (*classical) cmd_classical_compare(c);
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const tfpme::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  } catch (const std::domain_error& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  }
  return kOk;
}
