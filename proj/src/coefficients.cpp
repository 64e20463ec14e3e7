#include "alphaland/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "alphaland/errors.hpp"
#include "alphaland/specialfns.hpp"

namespace alphaland::coeff {

namespace {

void require_positive_index(int k) {
  if (k < 1) throw DomainError("coefficient index k must be positive, got " + std::to_string(k));
}

bool is_even_integer(double x) { return std::floor(x / 2.0) == x / 2.0; }

// Trapezoid sums of f_z e^{i(k+1)t} and f_zbar e^{-i(k+1)t} on the circle.
template <typename PairAt>
ExtractionResult extract_impl(PairAt pair_at, int k, double alpha, double r, int n_points) {
  const double g = g_factor(k, alpha, r);
  if (g == 0.0) {
    throw DegenerateExtractionError("G_k(r, alpha) vanishes (alpha = 0 or alpha = 2k); c_{+-" +
                                    std::to_string(k) + "} cannot be recovered");
  }
  Complex fz_mode{};
  Complex fzb_mode{};
  for (int j = 0; j < n_points; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / n_points;
    const Complex u = std::polar(1.0, theta);
    const WirtingerPair w = pair_at(r * u);
    const Complex twist = std::polar(1.0, (k + 1) * theta);
    fz_mode += w.dz * twist;
    fzb_mode += w.dzbar * std::conj(twist);
  }
  const double scale = static_cast<double>(n_points) * std::pow(r, k + 1) * g;
  return {k, fzb_mode / scale, fz_mode / scale, r, n_points};
}

void check_extraction_args(int k, double r, int n_points, int needed) {
  require_positive_index(k);
  if (!(r > 0.0 && r < 1.0)) throw DomainError("extraction radius must lie in (0, 1)");
  if (n_points < needed) {
    throw AliasingError("extraction needs at least " + std::to_string(needed) + " quadrature points, got " +
                        std::to_string(n_points));
  }
}

}  // namespace

double g_factor(int k, double alpha, double r) {
  require_positive_index(k);
  if (!(alpha > -1.0)) throw DomainError("g_factor requires alpha > -1");
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("g_factor requires r in [0, 1]");
  const special::HypParams p{-alpha / 2.0, k - alpha / 2.0, k + 1.0};
  if (r < 1.0) return special::hyp2f1_derivative(p, r * r);
  const double factor = p.a() * p.b() / p.c();
  if (factor == 0.0) return 0.0;
  return factor * special::hyp2f1_at_one(p.shifted());
}

int default_extraction_points(int max_index) { return std::max(256, 8 * (max_index + 2)); }

ExtractionResult extract(const WirtingerSource& source, int k, double alpha, double r, int n_points) {
  check_extraction_args(k, r, n_points, 4 * (k + 2));
  return extract_impl(source, k, alpha, r, n_points);
}

ExtractionResult extract(const AlphaHarmonicMap& map, int k, double r, int n_points) {
  check_extraction_args(k, r, n_points, 4 * (std::max(k, map.spectrum().max_index()) + 2));
  const RadialFactors factors = radial_factors(map, r * r);
  return extract_impl([&](Complex z) { return wirtinger(map, factors, z); }, k, map.alpha(), r, n_points);
}

double coefficient_estimate_lhs(int k, double alpha, double c_plus_abs, double c_minus_abs) {
  require_positive_index(k);
  if (!(alpha > 0.0)) throw DomainError("the coefficient estimate requires alpha > 0");
  if (c_plus_abs < 0.0 || c_minus_abs < 0.0) throw DomainError("coefficient moduli must be non-negative");
  const double prefactor = alpha * std::abs(2.0 * k - alpha) / (2.0 * (k + 1));
  if (prefactor == 0.0) return 0.0;
  const double f_one = special::hyp2f1_at_one({1.0 - alpha / 2.0, k + 1.0 - alpha / 2.0, k + 2.0});
  return prefactor * f_one * (c_plus_abs + c_minus_abs);
}

double coefficient_bound(int k, double alpha, double Lambda) {
  require_positive_index(k);
  if (!(alpha > 0.0) || is_even_integer(alpha)) {
    throw DomainError("the closed-form coefficient bound requires alpha > 0 and not an even integer, got " +
                      std::to_string(alpha));
  }
  if (!(Lambda > 0.0)) throw DomainError("Lambda must be positive");
  using special::gamma;
  return 2.0 * Lambda * gamma(1.0 + alpha / 2.0) * gamma(k + 1.0 + alpha / 2.0) /
         (gamma(k + 1.0) * gamma(alpha + 1.0) * std::abs(2.0 * k - alpha));
}

TermBound series_term_bound(int k, double alpha, int n) {
  require_positive_index(k);
  if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("the term bound requires alpha in (0, 2)");
  if (n < 1) throw DomainError("the term bound requires n >= 1");
  using special::gamma;
  using special::pochhammer;
  const auto un = static_cast<unsigned>(n);
  const double lhs = std::abs(pochhammer(-alpha / 2.0, un) * pochhammer(k - alpha / 2.0, un) /
                              (pochhammer(k + 1.0, un) * pochhammer(1.0, un)));
  const double rhs =
      1.0 - gamma(k + 1.0) * gamma(1.0 + alpha) / (gamma(k + 1.0 + alpha / 2.0) * gamma(1.0 + alpha / 2.0));
  return {lhs, rhs};
}

}  // namespace alphaland::coeff
