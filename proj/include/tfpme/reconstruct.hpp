#pragma once

#include "tfpme/params.hpp"
#include "tfpme/profile.hpp"

namespace tfpme {

/// alpha / (2+m).
double similarity_exponent(const FractionalParams& params);

/// u(x, t) = t^-a U(-|x| t^-a) on |x| <= z0* t^a, zero outside, built from a
/// mass-matched half profile. Immutable after construction.
class SpaceTimeSolution {
 public:
  explicit SpaceTimeSolution(Profile profile);

  const Profile& profile() const { return profile_; }
  double similarity_exponent() const { return exponent_; }
  /// Support half-width z0* t^a at time t.
  double front(double t) const;

  /// u(x, t); off-grid values by linear interpolation of the profile.
  double evaluate_u(double x, double t) const;

  /// 2 int_{-front(t)}^0 u dx, trapezoid on the mapped grid x_n = z_n t^a.
  double total_mass(double t) const;

 private:
  Profile profile_;
  double exponent_;
};

/// |dU/dz| at z = 0^- from the second-order backward difference. This is the
/// one-sided slope of the reflected (even) profile at the origin; nonzero
/// slope means a cusp there.
double origin_one_sided_slope(const Profile& profile);

}  // namespace tfpme
