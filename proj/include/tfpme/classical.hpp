#pragma once

// Closed-form point-source solution of u_t = (u^m u_x)_x (alpha = 1),
// u = t^(-1/(2+m)) U(x t^(-1/(2+m))) with
//
//   U(z) = (D - m z^2 / (2(2+m)))_+^(1/m),
//
// D fixed by int U dz = 1. U solves U^m U' = -z U / (2+m) on its support.

namespace tfpme {

/// D for unit mass.
double classical_constant(double m);

/// U(z); symmetric in z and zero for |z| >= classical_support(m).
double classical_profile(double m, double z);

/// Support half-width sqrt(2 (2+m) D / m).
double classical_support(double m);

}  // namespace tfpme
