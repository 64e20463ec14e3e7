#pragma once

namespace alphaland::landau {

/// Admissible parameters: alpha in (0, 2), lambda_f(0) >= beta > 0
/// and Lambda_f <= Lambda on the disc.
class LandauInput {
 public:
  /// Throws DomainError naming the violated hypothesis.
  LandauInput(double alpha, double beta, double Lambda);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double Lambda() const noexcept { return Lambda_; }

 private:
  double alpha_;
  double beta_;
  double Lambda_;
};

struct LandauResult {
  double a;             // Gamma(1 + alpha/2) / Gamma(1 + alpha)
  double rho0;          // univalence radius, root of phi
  double r0_lower;      // schlicht radius bound, reported as computed
  double phi_residual;  // |phi(rho0)|
  int iterations;       // bisection steps

  bool positive_r0() const noexcept { return r0_lower > 0.0; }
};

/// a = Gamma(1 + alpha/2) / Gamma(1 + alpha), which lies in (1/2, 1) for alpha in (0, 2).
double a_constant(double alpha);

/// phi(x) = beta - 2 Lambda/(2 - alpha) * ((2 - alpha) x^2/(1 - x) + 2a/(1 - x)^3 - 2a
///                                         + (2a - 1) x^2/(1 - x^2)),  x in [0, 1).
double phi(const LandauInput& input, double x);

/// Unique root of phi by bisection.
///
/// The bracket's upper end is the first point of 1 - 2^-j (j = 1..40) where phi
/// turns negative. Bisection runs until the bracket is no wider than 1e-14 and
/// then on to adjacent doubles. Throws BoundaryError if phi stays non-negative
/// up to 1 - 2^-40.
LandauResult solve_rho0(const LandauInput& input);

/// rho0 (beta - 2 Lambda/(2 - alpha) ((2 - alpha)/(1 - rho0) rho0^2/3 + 2a/(1 - rho0)^3 - 2a
///                                   + (2a - 1)/(1 - rho0^2) rho0^2/3)).
double r0_lower_bound(const LandauInput& input, double rho0);

/// Jacobian variant: |J_f(0)| = beta gives lambda_f(0) >= beta/Lambda, so the
/// problem is solve_rho0 with beta replaced by beta/Lambda.
LandauResult normalized_radii(const LandauInput& input);

struct MConstant {
  double r_star;
  double m;
};

/// Minimum of (3 - r^2)/(r (1 - r^2)) on (0, 1) by golden-section search.
MConstant classical_m_constant();

}  // namespace alphaland::landau
