#include "alphaland/landau.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "alphaland/errors.hpp"
#include "alphaland/specialfns.hpp"

namespace alphaland::landau {

namespace {

constexpr int kCeilingExponent = 40;

// (1 - x)^-3 - 1 without cancellation near x = 0.
double cube_growth(double x) { return std::expm1(-3.0 * std::log1p(-x)); }

double bracket_sum(double alpha, double a, double x, double quadratic_weight) {
  const double x2 = x * x;
  const double f1 = (2.0 - alpha) * x2 / (1.0 - x);
  const double f2 = 2.0 * a * cube_growth(x);
  const double f3 = (2.0 * a - 1.0) * x2 / ((1.0 - x) * (1.0 + x));
  return quadratic_weight * (f1 + f3) + f2;
}

}  // namespace

LandauInput::LandauInput(double alpha, double beta, double Lambda) : alpha_(alpha), beta_(beta), Lambda_(Lambda) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw DomainError("alpha must lie in (0, 2), got " + std::to_string(alpha));
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw DomainError("beta must be positive (lambda_f(0) >= beta > 0), got " + std::to_string(beta));
  }
  if (!(Lambda > 0.0) || !std::isfinite(Lambda)) {
    throw DomainError("Lambda must be positive (Lambda_f <= Lambda), got " + std::to_string(Lambda));
  }
}

double a_constant(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    throw DomainError("a_constant requires alpha in (0, 2), got " + std::to_string(alpha));
  }
  return special::gamma(1.0 + alpha / 2.0) / special::gamma(1.0 + alpha);
}

double phi(const LandauInput& input, double x) {
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("phi requires x in [0, 1), got " + std::to_string(x));
  const double alpha = input.alpha();
  const double a = a_constant(alpha);
  return input.beta() - 2.0 * input.Lambda() / (2.0 - alpha) * bracket_sum(alpha, a, x, 1.0);
}

LandauResult solve_rho0(const LandauInput& input) {
  if (!(phi(input, 0.0) > 0.0)) {
    throw std::logic_error("phi(0) = beta must be positive");
  }
  double lo = 0.0;
  double hi = -1.0;
  for (int j = 1; j <= kCeilingExponent; ++j) {
    const double u = 1.0 - std::ldexp(1.0, -j);
    if (phi(input, u) < 0.0) {
      hi = u;
      break;
    }
    lo = u;
  }
  if (hi < 0.0) {
    throw BoundaryError("phi has no sign change below 1 - 2^-40; the root is pushed against 1", lo, 1.0);
  }

  int iterations = 0;
  while (true) {
    const double mid = lo + (hi - lo) / 2.0;
    // Past the 1e-14 width target the loop continues to adjacent doubles,
    // where the residual is limited by phi's own rounding.
    if (mid <= lo || mid >= hi) break;
    ++iterations;
    if (phi(input, mid) >= 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double phi_lo = phi(input, lo);
  const double phi_hi = phi(input, hi);
  const double rho0 = std::abs(phi_lo) <= std::abs(phi_hi) ? lo : hi;

  LandauResult out{};
  out.a = a_constant(input.alpha());
  out.rho0 = rho0;
  out.phi_residual = std::min(std::abs(phi_lo), std::abs(phi_hi));
  out.iterations = iterations;
  out.r0_lower = r0_lower_bound(input, rho0);
  return out;
}

double r0_lower_bound(const LandauInput& input, double rho0) {
  if (!(rho0 >= 0.0 && rho0 < 1.0)) throw DomainError("rho0 must lie in [0, 1)");
  const double alpha = input.alpha();
  const double a = a_constant(alpha);
  return rho0 * (input.beta() - 2.0 * input.Lambda() / (2.0 - alpha) * bracket_sum(alpha, a, rho0, 1.0 / 3.0));
}

LandauResult normalized_radii(const LandauInput& input) {
  return solve_rho0(LandauInput(input.alpha(), input.beta() / input.Lambda(), input.Lambda()));
}

MConstant classical_m_constant() {
  const auto g = [](double r) { return (3.0 - r * r) / (r * (1.0 - r * r)); };
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double lo = 1e-6;
  double hi = 1.0 - 1e-6;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double g1 = g(x1);
  double g2 = g(x2);
  while (hi - lo > 1e-10) {
    if (g1 < g2) {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - inv_phi * (hi - lo);
      g1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + inv_phi * (hi - lo);
      g2 = g(x2);
    }
  }
  const double r_star = (lo + hi) / 2.0;
  return {r_star, g(r_star)};
}

}  // namespace alphaland::landau
