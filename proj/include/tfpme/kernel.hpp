#pragma once

#include "tfpme/params.hpp"

// Volterra kernel of the fixed-point equation for the self-similar profile,
//
//   K(z, tau) = int_{(z/tau)^((2+m)/alpha)}^1
//                 [(A+B)(z - tau s^B) - B tau s^B] (1 - s)^-alpha ds,
//
// defined for tau <= z <= 0. Every function throws std::domain_error when
// called outside that triangle.

namespace tfpme {

/// (z/tau)^((2+m)/alpha) evaluated in log space; 0 at z = 0, 1 at z = tau.
double kernel_ratio(const FractionalParams& p, double z, double tau);

/// Closed form through the beta and incomplete beta functions.
double kernel_exact(const FractionalParams& p, double z, double tau);

/// Independent evaluation of the defining integral by adaptive
/// Gauss-Kronrod after the substitution s = 1 - t^(1/(1-alpha)), which
/// removes the (1-s)^-alpha endpoint singularity. Throws NumericalError if
/// `tol` is not met.
double kernel_quadrature(const FractionalParams& p, double z, double tau, double tol);

/// dK/dz for tau < z <= 0. Diverges as tau -> z, so tau == z is rejected.
double kernel_z_derivative(const FractionalParams& p, double z, double tau);

/// K_-(z, tau) <= K(z, tau).
double kernel_lower_bound(const FractionalParams& p, double z, double tau);

/// K(0, tau) >= K(z, tau) for every z in [tau, 0].
double kernel_upper_bound(const FractionalParams& p, double tau);

/// Leading-order behaviour as tau -> z^-:
///   -alpha/((1-alpha)(2+m)) z ((2+m)/alpha (1 - z/tau))^(1-alpha).
double kernel_asymptotic_near_boundary(const FractionalParams& p, double z, double tau);

/// An antiderivative G(z, .) with dG/dtau = K(z, tau).
double kernel_antiderivative(const FractionalParams& p, double z, double tau);

/// Exact int_lo^hi K(z, tau) dtau for lo <= hi <= z <= 0, from the
/// antiderivative with the linear part differenced analytically.
double kernel_panel_integral(const FractionalParams& p, double z, double lo, double hi);

/// Same panel integral by 16-point Gauss-Legendre on kernel_exact. When the
/// panel touches tau = z the substitution tau = z - s^(1/(1-alpha)) is
/// applied first to absorb the (z - tau)^(1-alpha) behaviour.
double kernel_panel_integral_gauss(const FractionalParams& p, double z, double lo, double hi);

}  // namespace tfpme
