#include "tfpme/mass_match.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tfpme/errors.hpp"

namespace tfpme {

double discrete_half_mass(const Profile& profile) {
  const auto u = profile.values();
  double sum = 0.5 * (u.front() + u.back());
  for (std::size_t n = 1; n + 1 < u.size(); ++n) sum += u[n];
  return profile.grid().h() * sum;
}

double mass_residual(const FractionalParams& params, double z0, std::size_t n_steps) {
  return discrete_half_mass(solve_profile(params, z0, n_steps)) - 0.5;
}

double mass_residual(const WeightMatrix& weights, double z0) {
  return discrete_half_mass(solve_profile(weights, z0)) - 0.5;
}

MassMatchResult find_support(const FractionalParams& params, std::size_t n_steps,
                             const SupportSearch& search) {
  return find_support(WeightMatrix::build(params, n_steps), search);
}

namespace {

std::string describe(const std::vector<std::pair<double, double>>& history) {
  std::ostringstream out;
  out << "history:";
  for (const auto& [z0, f] : history) out << " (" << z0 << ", " << f << ")";
  return out.str();
}

}  // namespace

MassMatchResult find_support(const WeightMatrix& weights, const SupportSearch& search) {
  if (!(search.tol > 0.0)) throw std::domain_error("find_support: tol must be positive");
  if (!(search.z0_init > 0.0)) throw std::domain_error("find_support: z0_init must be positive");

  std::vector<std::pair<double, double>> history;
  const auto evaluate = [&](double z0) {
    Profile profile = solve_profile(weights, z0);
    const double f = discrete_half_mass(profile) - 0.5;
    history.emplace_back(z0, f);
    return std::pair<Profile, double>(std::move(profile), f);
  };
  const auto finish = [&](Profile profile, double z0, double f) {
    auto sorted = history;
    std::sort(sorted.begin(), sorted.end());
    bool monotone = true;
    for (std::size_t k = 1; k < sorted.size(); ++k) {
      if (sorted[k].second < sorted[k - 1].second) monotone = false;
    }
    return MassMatchResult{z0, std::move(profile), f, static_cast<int>(history.size()),
                           std::move(history), monotone};
  };

  auto [profile, f] = evaluate(search.z0_init);
  if (std::abs(f) < search.tol) return finish(std::move(profile), search.z0_init, f);

  double lo = search.z0_init;
  double hi = search.z0_init;
  const bool grow = f < 0.0;
  bool bracketed = false;
  for (int step = 0; step < search.max_bracket_steps; ++step) {
    const double next = grow ? hi * 2.0 : lo * 0.5;
    auto [p_next, f_next] = evaluate(next);
    if (std::abs(f_next) < search.tol) return finish(std::move(p_next), next, f_next);
    if (grow) {
      if (f_next > 0.0) {
        hi = next;
        bracketed = true;
        break;
      }
      lo = hi = next;
    } else {
      if (f_next < 0.0) {
        lo = next;
        bracketed = true;
        break;
      }
      lo = hi = next;
    }
  }
  if (!bracketed) {
    throw NumericalError("find_support: no sign change of the mass residual found; " +
                         describe(history));
  }

  for (int step = 0; step < search.max_bisections; ++step) {
    const double mid = 0.5 * (lo + hi);
    auto [p_mid, f_mid] = evaluate(mid);
    if (std::abs(f_mid) < search.tol) return finish(std::move(p_mid), mid, f_mid);
    (f_mid < 0.0 ? lo : hi) = mid;
  }
  throw NumericalError("find_support: bisection did not reach tolerance; " + describe(history));
}

}  // namespace tfpme
