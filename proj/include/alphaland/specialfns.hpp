#pragma once

#include <cstddef>

namespace alphaland::special {

/// Parameters (a, b; c) of the Gauss hypergeometric function.
///
/// Construction rejects c = 0, -1, -2, ... since (c)_n would vanish in a
/// denominator of the series.
class HypParams {
 public:
  HypParams(double a, double b, double c);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }

  /// Parameters (a+1, b+1; c+1) of the derivative series.
  HypParams shifted() const { return {a_ + 1.0, b_ + 1.0, c_ + 1.0}; }

 private:
  double a_;
  double b_;
  double c_;
};

struct SeriesOptions {
  /// Hard cap on the number of series terms before an AccuracyError.
  std::size_t max_terms = 100'000;
};

/// Gamma function for s > 0 (Lanczos approximation, relative error below 1e-13 on (0, 50]).
double gamma(double s);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
double pochhammer(double a, unsigned n);

/// True when x is 0, -1, -2, ...
bool is_nonpositive_integer(double x) noexcept;

/// Gauss hypergeometric series F(a, b; c; x) for 0 <= x < 1.
///
/// Summation stops once three consecutive terms fall below
/// 1e-16 * (|partial sum| + 1). A non-positive integer a or b makes the
/// series a polynomial, which is summed exactly to its degree. Exhausting
/// `opts.max_terms` throws AccuracyError carrying the partial sum.
double hyp2f1(const HypParams& p, double x, const SeriesOptions& opts = {});

/// F(a, b; c; 1) by Gauss summation; requires c - a - b > 0.
double hyp2f1_at_one(const HypParams& p);

/// d/dx F(a, b; c; x) = (ab/c) F(a+1, b+1; c+1; x).
double hyp2f1_derivative(const HypParams& p, double x, const SeriesOptions& opts = {});

}  // namespace alphaland::special
