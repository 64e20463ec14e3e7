#pragma once

#include <functional>

#include "alphaland/alphamap.hpp"

namespace alphaland::coeff {

/// Coefficients c_k and c_{-k} recovered from the Fourier modes of the
/// Wirtinger derivatives on the circle |z| = radius.
struct ExtractionResult {
  int k;
  Complex c_plus;   // estimate of c_k
  Complex c_minus;  // estimate of c_{-k}
  double radius;
  int quadrature_points;
};

/// Pointwise source of (f_z, f_zbar).
using WirtingerSource = std::function<WirtingerPair(Complex)>;

/// G_k(r, alpha) = (-alpha/2)(k - alpha/2)/(k+1) F(1 - alpha/2, k + 1 - alpha/2; k+2; r^2).
///
/// r = 1 is evaluated by Gauss summation and needs alpha >= 0.
double g_factor(int k, double alpha, double r);

/// Default quadrature size for a spectrum of maximal index K: max(256, 8(K+2)).
int default_extraction_points(int max_index);

/// Trapezoidal extraction of c_{+-k}:
///
///   c_{-k} r^{k+1} G_k = (1/2pi) int f_z(r e^{it}) e^{i(k+1)t} dt
///   c_{k}  r^{k+1} G_k = (1/2pi) int f_zbar(r e^{it}) e^{-i(k+1)t} dt
///
/// Throws DegenerateExtractionError when G_k(r, alpha) = 0 (alpha = 0 or
/// alpha = 2k) and AliasingError when n_points < 4(k+2).
ExtractionResult extract(const WirtingerSource& source, int k, double alpha, double r, int n_points);

/// Same identities evaluated on a series map. The map's support also bounds
/// aliasing, so n_points must be at least 4(max(k, K)+2).
ExtractionResult extract(const AlphaHarmonicMap& map, int k, double r, int n_points);

/// Left-hand side of the coefficient estimate:
///
///   alpha |2k - alpha| / (2(k+1)) * F(1 - alpha/2, k + 1 - alpha/2; k+2; 1) * (|c_k| + |c_{-k}|)
///
/// Any map with Lambda_f <= Lambda satisfies lhs <= Lambda. Identically zero at alpha = 2k.
double coefficient_estimate_lhs(int k, double alpha, double c_plus_abs, double c_minus_abs);

/// Closed-form bound on |c_k| + |c_{-k}|:
///
///   2 Lambda Gamma(1 + alpha/2) Gamma(k + 1 + alpha/2) / (k! Gamma(alpha + 1) |2k - alpha|)
///
/// Requires alpha > 0 and not an even integer.
double coefficient_bound(int k, double alpha, double Lambda);

struct TermBound {
  double lhs;  // |(-alpha/2)_n (k - alpha/2)_n / ((k+1)_n n!)|
  double rhs;  // 1 - Gamma(k+1) Gamma(1+alpha) / (Gamma(k+1+alpha/2) Gamma(1+alpha/2))
};

/// Both sides of the bound on the n-th Taylor coefficient of
/// F(-alpha/2, k - alpha/2; k+1; t), alpha in (0, 2).
TermBound series_term_bound(int k, double alpha, int n);

}  // namespace alphaland::coeff
