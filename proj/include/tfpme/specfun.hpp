#pragma once

// Gamma, beta and the (non-regularized) lower incomplete beta function.
// All functions are pure and throw std::domain_error outside their domain.

namespace tfpme::specfun {

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// Gamma(x) for x > 0.
double gamma(double x);

/// Euler beta function B(a, b) = Gamma(a) Gamma(b) / Gamma(a + b).
double beta(double a, double b);

/// beta_xi(a, b) = int_0^xi t^(a-1) (1-t)^(b-1) dt, 0 <= xi <= 1.
///
/// Evaluated with the modified Lentz continued fraction. For
/// xi > (a+1)/(a+b+2) the complementary tail is expanded instead and
/// subtracted from B(a, b).
double incomplete_beta_lower(double xi, double a, double b);

/// int_xi^1 t^(a-1) (1-t)^(b-1) dt, i.e. B(a, b) - beta_xi(a, b) computed
/// without cancellation when xi is close to 1.
double incomplete_beta_upper(double xi, double a, double b);

}  // namespace tfpme::specfun
