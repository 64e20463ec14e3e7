#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

namespace alphaland {

using Complex = std::complex<double>;

/// Finitely supported two-sided coefficient sequence {c_k}, k in Z.
///
/// Indices are unique; absent indices read as zero.
class CoefficientSpectrum {
 public:
  CoefficientSpectrum() = default;
  /// Throws DomainError on a repeated index.
  explicit CoefficientSpectrum(const std::vector<std::pair<int, Complex>>& entries);

  Complex at(int k) const;
  bool contains(int k) const { return entries_.count(k) != 0; }
  const std::map<int, Complex>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  /// Largest |k| in the support, 0 for an empty spectrum.
  int max_index() const noexcept;

  CoefficientSpectrum scaled(double factor) const;

  friend bool operator==(const CoefficientSpectrum&, const CoefficientSpectrum&) = default;

 private:
  std::map<int, Complex> entries_;
};

/// Series solution of T_alpha(f) = 0 determined by a coefficient spectrum:
///
///   f(z) = sum_{k>=0} c_k F(-a/2, k-a/2; k+1; |z|^2) z^k
///        + sum_{k>=1} c_{-k} F(-a/2, k-a/2; k+1; |z|^2) conj(z)^k
class AlphaHarmonicMap {
 public:
  /// Throws DomainError unless alpha > -1.
  AlphaHarmonicMap(double alpha, CoefficientSpectrum spectrum);

  double alpha() const noexcept { return alpha_; }
  const CoefficientSpectrum& spectrum() const noexcept { return spectrum_; }

  friend bool operator==(const AlphaHarmonicMap&, const AlphaHarmonicMap&) = default;

 private:
  double alpha_;
  CoefficientSpectrum spectrum_;
};

struct WirtingerPair {
  Complex dz;     // df/dz
  Complex dzbar;  // df/dzbar
};

struct Dilations {
  double Lambda;    // |f_z| + |f_zbar|
  double lambda;    // ||f_z| - |f_zbar||
  double jacobian;  // |f_z|^2 - |f_zbar|^2
};

/// Hypergeometric factors of every index 0..K at a fixed t = |z|^2.
///
/// hyp[k]  = F(-a/2, k-a/2; k+1; t)
/// dhyp[k] = d/dt of hyp[k], the G_k factor of the derivative series.
/// Entries for indices outside the support are left at zero.
struct RadialFactors {
  double t = 0.0;
  std::vector<double> hyp;
  std::vector<double> dhyp;
};

RadialFactors radial_factors(const AlphaHarmonicMap& map, double t);

/// Pointwise value; requires |z| < 1.
Complex evaluate(const AlphaHarmonicMap& map, Complex z);
/// Value at z reusing factors computed for t = |z|^2.
Complex evaluate(const AlphaHarmonicMap& map, const RadialFactors& factors, Complex z);

/// Exact term-by-term Wirtinger derivatives of the truncated series; requires |z| < 1.
WirtingerPair wirtinger(const AlphaHarmonicMap& map, Complex z);
WirtingerPair wirtinger(const AlphaHarmonicMap& map, const RadialFactors& factors, Complex z);

Dilations dilations(const WirtingerPair& pair) noexcept;

/// Polar sampling grid for empirical sup estimates: radii r_max * i / (radial-1)
/// for i = 0..radial-1, angles 2 pi j / angular.
struct PolarGrid {
  int radial = 64;
  int angular = 256;
  double r_max = 0.999;
};

/// Maximum of Lambda_f over the grid, a lower estimate of sup_D Lambda_f.
double sup_Lambda(const AlphaHarmonicMap& map, const PolarGrid& grid = {});

/// Normalising constant c_alpha = Gamma(alpha/2 + 1)^2 / Gamma(1 + alpha).
double kernel_constant(double alpha);

/// K_alpha(z) = c_alpha (1 - |z|^2)^(alpha+1) / |1 - z|^(alpha+2).
double kernel(double alpha, Complex z);

/// Boundary samples f*(e^{i tau_j}) at tau_j = 2 pi j / N, N >= 4.
class BoundaryData {
 public:
  explicit BoundaryData(std::vector<Complex> samples);

  const std::vector<Complex>& samples() const noexcept { return samples_; }
  std::size_t size() const noexcept { return samples_.size(); }

 private:
  std::vector<Complex> samples_;
};

/// Trapezoidal quadrature of (1/2pi) int K_alpha(z e^{-i tau}) f*(e^{i tau}) dtau.
Complex poisson_solve(double alpha, const BoundaryData& data, Complex z);

/// |T_alpha(f)(z)| with every derivative replaced by a second-order central
/// difference of `evaluate` (5-point Laplacian). Requires |z| + 2h < 1 and
/// h in [1e-6, 1e-2].
double t_alpha_residual(const AlphaHarmonicMap& map, Complex z, double h);

}  // namespace alphaland
