#include "tfpme/order.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tfpme/errors.hpp"
#include "tfpme/mass_match.hpp"

namespace tfpme {

double shared_node_difference(const Profile& coarse, const Profile& fine, std::size_t first_node) {
  if (!(coarse.params() == fine.params())) {
    throw std::invalid_argument("shared_node_difference: parameter mismatch");
  }
  if (coarse.grid().z0() != fine.grid().z0() ||
      fine.grid().n_steps() != 2 * coarse.grid().n_steps()) {
    throw std::invalid_argument("shared_node_difference: fine grid must halve the coarse step");
  }
  double worst = 0.0;
  for (std::size_t n = first_node; n < coarse.size(); ++n) {
    worst = std::max(worst, std::abs(coarse[n] - fine[2 * n]));
  }
  return worst;
}

namespace {

OrderReport refine_from(const Profile& coarse) {
  const FractionalParams& params = coarse.params();
  const double z0 = coarse.grid().z0();
  const std::size_t base_n = coarse.grid().n_steps();
  // One weight matrix alive at a time; the 4N one dominates memory.
  Profile middle = solve_profile(params, z0, 2 * base_n);
  const double diff_coarse = shared_node_difference(coarse, middle);
  const Profile fine = solve_profile(params, z0, 4 * base_n);
  const double diff_fine = shared_node_difference(middle, fine);
  if (!(diff_fine > 0.0) || !(diff_coarse > 0.0)) {
    throw NumericalError("estimate_order: degenerate (zero) grid difference");
  }
  const auto skip = static_cast<std::size_t>(interior_skip * static_cast<double>(base_n));
  const double interior =
      std::log2(shared_node_difference(coarse, middle, skip) / shared_node_difference(middle, fine, 2 * skip));
  return {params, z0, base_n, diff_coarse, diff_fine, std::log2(diff_coarse / diff_fine), interior};
}

void require_base(std::size_t base_n) {
  if (base_n < 64) throw std::domain_error("estimate_order: base_n must be >= 64");
}

}  // namespace

OrderReport estimate_order(const FractionalParams& params, double z0, std::size_t base_n) {
  require_base(base_n);
  return refine_from(solve_profile(params, z0, base_n));
}

OrderReport estimate_order(const FractionalParams& params, std::size_t base_n) {
  require_base(base_n);
  const WeightMatrix weights = WeightMatrix::build(params, base_n);
  const double z0 = find_support(weights).z0_star;
  return refine_from(solve_profile(weights, z0));
}

}  // namespace tfpme
