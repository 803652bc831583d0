#pragma once

namespace tfpme {

/// Order alpha of the Caputo derivative and diffusivity exponent m, with the
/// constants of the self-similar profile equation derived once.
///
/// Invariants: 0 < alpha < 1, m > 0, A = 1 - alpha - alpha/(2+m),
/// B = alpha/(2+m). Construction throws std::domain_error otherwise.
class FractionalParams {
 public:
  FractionalParams(double alpha, double m);

  double alpha() const { return alpha_; }
  double m() const { return m_; }
  double A() const { return A_; }
  double B() const { return B_; }

  /// Self-similar exponent a = alpha/(2+m); u(x,t) = t^-a U(x t^-a).
  double similarity_exponent() const { return B_; }

  /// (2+m)/alpha, the power applied to z/tau inside the kernel.
  double ratio_power() const { return ratio_power_; }
  /// First beta argument 1 + alpha/(2+m).
  double beta_a() const { return 1.0 + B_; }
  /// Second beta argument 1 - alpha.
  double beta_b() const { return 1.0 - alpha_; }
  /// 1 - alpha + alpha/(2+m), equal to A + 2B.
  double slope_factor() const { return 1.0 - alpha_ + B_; }
  /// Cached B(1 + alpha/(2+m), 1 - alpha).
  double kernel_beta() const { return kernel_beta_; }
  /// Cached Gamma(1 - alpha).
  double gamma_one_minus_alpha() const { return gamma_1ma_; }

  friend bool operator==(const FractionalParams& l, const FractionalParams& r) {
    return l.alpha_ == r.alpha_ && l.m_ == r.m_;
  }

 private:
  double alpha_;
  double m_;
  double A_;
  double B_;
  double ratio_power_;
  double kernel_beta_;
  double gamma_1ma_;
};

}  // namespace tfpme
