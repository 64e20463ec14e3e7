#include "alphaland/specialfns.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "alphaland/errors.hpp"

namespace alphaland::special {

namespace {

// Lanczos approximation with N = 13, g ~= 6.02468 (the double-precision set
// published with Boost.Math), written as a rational function P(z)/Q(z) whose
// denominator is z (z+1) ... (z+11).
constexpr double kLanczosG = 6.024680040776729583740234375;

constexpr std::array<double, 13> kLanczosNum = {
    23531376880.41075968857200767445163675473,
    42919803642.64909876895789904700198885093,
    35711959237.35566804944018545154716670596,
    17921034426.03720969991975575445893111267,
    6039542586.35202800506429164430729792107,
    1439720407.311721673663223072794912393972,
    248874557.8620541565114603864132294232163,
    31426415.58540019438061423162831820536287,
    2876370.628935372441225409051620849613599,
    186056.2653952234950402949897160456992822,
    8071.672002365816210638002902272250613822,
    210.8242777515793458725097339207133627117,
    2.506628274631000270164908177133837338626,
};

constexpr std::array<double, 13> kLanczosDenom = {
    0.0,       39916800.0, 120543840.0, 150917976.0, 105258076.0, 45995730.0, 13339535.0,
    2637558.0, 357423.0,   32670.0,     1925.0,      66.0,        1.0,
};

double lanczos_sum(double z) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = kLanczosNum.size(); i-- > 0;) {
    num = num * z + kLanczosNum[i];
    den = den * z + kLanczosDenom[i];
  }
  return num / den;
}

double gamma_positive(double z) {
  const double zgh = z + kLanczosG - 0.5;
  const double lanczos = lanczos_sum(z);
  if (z > 100.0) {
    // Split the power so that neither factor overflows before the product.
    const double half_power = std::pow(zgh, (z - 0.5) / 2.0);
    return lanczos * (half_power / std::exp(zgh)) * half_power;
  }
  return lanczos * std::pow(zgh, z - 0.5) / std::exp(zgh);
}

// sin(pi x) with argument reduction so that exact zeros stay exact.
double sin_pi(double x) {
  double r = std::fmod(x, 2.0);
  if (r < 0.0) r += 2.0;
  if (r == 0.0 || r == 1.0) return 0.0;
  return std::sin(std::numbers::pi * r);
}

// 1/Gamma(x) for every real x, zero at the poles.
double reciprocal_gamma(double x) {
  if (x > 0.0) return 1.0 / gamma_positive(x);
  if (is_nonpositive_integer(x)) return 0.0;
  // Reflection: 1/Gamma(x) = sin(pi x) Gamma(1 - x) / pi.
  return sin_pi(x) * gamma_positive(1.0 - x) / std::numbers::pi;
}

// Neumaier's variant of compensated summation.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Degree of the polynomial when a or b is a non-positive integer.
long polynomial_degree(const HypParams& p) {
  long degree = -1;
  for (double v : {p.a(), p.b()}) {
    if (is_nonpositive_integer(v)) {
      const long d = std::lround(-v);
      degree = degree < 0 ? d : std::min(degree, d);
    }
  }
  return degree;
}

}  // namespace

HypParams::HypParams(double a, double b, double c) : a_(a), b_(b), c_(c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
    throw DomainError("hypergeometric parameters must be finite");
  }
  if (is_nonpositive_integer(c)) {
    throw DomainError("hypergeometric parameter c must not be zero or a negative integer, got " +
                      std::to_string(c));
  }
}

bool is_nonpositive_integer(double x) noexcept { return x <= 0.0 && std::floor(x) == x; }

double gamma(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw DomainError("gamma requires a finite positive argument, got " + std::to_string(s));
  }
  return gamma_positive(s);
}

double pochhammer(double a, unsigned n) {
  double result = 1.0;
  for (unsigned i = 0; i < n; ++i) result *= a + static_cast<double>(i);
  return result;
}

double hyp2f1(const HypParams& p, double x, const SeriesOptions& opts) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw DomainError("hyp2f1 requires 0 <= x < 1, got " + std::to_string(x));
  }
  const double a = p.a();
  const double b = p.b();
  const double c = p.c();

  CompensatedSum sum;
  sum.add(1.0);
  double term = 1.0;

  if (const long degree = polynomial_degree(p); degree >= 0) {
    for (long n = 0; n < degree; ++n) {
      const double dn = static_cast<double>(n);
      term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
      sum.add(term);
    }
    return sum.value();
  }

  constexpr double kRelTol = 1e-16;
  constexpr int kQuietTermsNeeded = 3;
  int quiet = 0;
  for (std::size_t n = 0; n < opts.max_terms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * x;
    sum.add(term);
    if (std::abs(term) < kRelTol * (std::abs(sum.value()) + 1.0)) {
      if (++quiet == kQuietTermsNeeded) return sum.value();
    } else {
      quiet = 0;
    }
  }
  throw AccuracyError("hyp2f1 did not converge within " + std::to_string(opts.max_terms) +
                          " terms at x = " + std::to_string(x),
                      sum.value(), opts.max_terms);
}

double hyp2f1_at_one(const HypParams& p) {
  const double a = p.a();
  const double b = p.b();
  const double c = p.c();
  if (!(c - a - b > 0.0)) {
    throw DomainError("Gauss summation requires c - a - b > 0, got " + std::to_string(c - a - b));
  }
  // Terminating series: Chu-Vandermonde, F(-m, b; c; 1) = (c-b)_m / (c)_m.
  if (is_nonpositive_integer(a)) {
    const auto m = static_cast<unsigned>(std::lround(-a));
    return pochhammer(c - b, m) / pochhammer(c, m);
  }
  if (is_nonpositive_integer(b)) {
    const auto m = static_cast<unsigned>(std::lround(-b));
    return pochhammer(c - a, m) / pochhammer(c, m);
  }
  const double gamma_c = c > 0.0 ? gamma_positive(c) : 1.0 / reciprocal_gamma(c);
  return gamma_c * gamma_positive(c - a - b) * reciprocal_gamma(c - a) * reciprocal_gamma(c - b);
}

double hyp2f1_derivative(const HypParams& p, double x, const SeriesOptions& opts) {
  const double factor = p.a() * p.b() / p.c();
  if (factor == 0.0) {
    if (!(x >= 0.0 && x < 1.0)) {
      throw DomainError("hyp2f1_derivative requires 0 <= x < 1, got " + std::to_string(x));
    }
    return 0.0;
  }
  return factor * hyp2f1(p.shifted(), x, opts);
}

}  // namespace alphaland::special
