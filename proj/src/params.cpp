#include "tfpme/params.hpp"

#include <cmath>
#include <stdexcept>

#include "tfpme/specfun.hpp"

namespace tfpme {

FractionalParams::FractionalParams(double alpha, double m) : alpha_(alpha), m_(m) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::domain_error("alpha must lie in (0, 1)");
  }
  if (!(m > 0.0) || !std::isfinite(m)) {
    throw std::domain_error("m must be positive and finite");
  }
  B_ = alpha / (2.0 + m);
  A_ = 1.0 - alpha - B_;
  ratio_power_ = (2.0 + m) / alpha;
  kernel_beta_ = specfun::beta(1.0 + B_, 1.0 - alpha);
  gamma_1ma_ = specfun::gamma(1.0 - alpha);
}

}  // namespace tfpme
