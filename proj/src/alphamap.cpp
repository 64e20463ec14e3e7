#include "alphaland/alphamap.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "alphaland/errors.hpp"
#include "alphaland/specialfns.hpp"

namespace alphaland {

namespace {

void require_inside_disc(Complex z, const char* what) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError(std::string(what) + " requires |z| < 1, got |z| = " + std::to_string(std::abs(z)));
  }
}

special::HypParams index_params(double alpha, int k) {
  return {-alpha / 2.0, k - alpha / 2.0, k + 1.0};
}

}  // namespace

CoefficientSpectrum::CoefficientSpectrum(const std::vector<std::pair<int, Complex>>& entries) {
  for (const auto& [k, c] : entries) {
    if (!entries_.emplace(k, c).second) {
      throw DomainError("coefficient index " + std::to_string(k) + " appears more than once");
    }
  }
}

Complex CoefficientSpectrum::at(int k) const {
  const auto it = entries_.find(k);
  return it == entries_.end() ? Complex{} : it->second;
}

int CoefficientSpectrum::max_index() const noexcept {
  int m = 0;
  for (const auto& [k, c] : entries_) m = std::max(m, std::abs(k));
  return m;
}

CoefficientSpectrum CoefficientSpectrum::scaled(double factor) const {
  CoefficientSpectrum out = *this;
  for (auto& [k, c] : out.entries_) c *= factor;
  return out;
}

AlphaHarmonicMap::AlphaHarmonicMap(double alpha, CoefficientSpectrum spectrum)
    : alpha_(alpha), spectrum_(std::move(spectrum)) {
  if (!(alpha > -1.0) || !std::isfinite(alpha)) {
    throw DomainError("alpha must satisfy alpha > -1, got " + std::to_string(alpha));
  }
}

RadialFactors radial_factors(const AlphaHarmonicMap& map, double t) {
  const int K = map.spectrum().max_index();
  RadialFactors out;
  out.t = t;
  out.hyp.assign(K + 1, 0.0);
  out.dhyp.assign(K + 1, 0.0);
  std::vector<bool> needed(K + 1, false);
  for (const auto& [k, c] : map.spectrum().entries()) needed[std::abs(k)] = true;
  for (int k = 0; k <= K; ++k) {
    if (!needed[k]) continue;
    const auto p = index_params(map.alpha(), k);
    out.hyp[k] = special::hyp2f1(p, t);
    out.dhyp[k] = special::hyp2f1_derivative(p, t);
  }
  return out;
}

Complex evaluate(const AlphaHarmonicMap& map, Complex z) {
  require_inside_disc(z, "evaluate");
  return evaluate(map, radial_factors(map, std::norm(z)), z);
}

Complex evaluate(const AlphaHarmonicMap& map, const RadialFactors& factors, Complex z) {
  const int K = map.spectrum().max_index();
  std::vector<Complex> zpow(K + 1), zbpow(K + 1);
  zpow[0] = zbpow[0] = 1.0;
  for (int k = 1; k <= K; ++k) {
    zpow[k] = zpow[k - 1] * z;
    zbpow[k] = zbpow[k - 1] * std::conj(z);
  }
  Complex sum{};
  for (const auto& [k, c] : map.spectrum().entries()) {
    const int m = std::abs(k);
    sum += c * factors.hyp[m] * (k >= 0 ? zpow[m] : zbpow[m]);
  }
  return sum;
}

WirtingerPair wirtinger(const AlphaHarmonicMap& map, Complex z) {
  require_inside_disc(z, "wirtinger");
  return wirtinger(map, radial_factors(map, std::norm(z)), z);
}

WirtingerPair wirtinger(const AlphaHarmonicMap& map, const RadialFactors& factors, Complex z) {
  const int K = map.spectrum().max_index();
  const Complex zb = std::conj(z);
  std::vector<Complex> zpow(K + 2), zbpow(K + 2);
  zpow[0] = zbpow[0] = 1.0;
  for (int k = 1; k <= K + 1; ++k) {
    zpow[k] = zpow[k - 1] * z;
    zbpow[k] = zbpow[k - 1] * zb;
  }
  WirtingerPair out{};
  for (const auto& [k, c] : map.spectrum().entries()) {
    const int m = std::abs(k);
    const double F = factors.hyp[m];
    const double G = factors.dhyp[m];
    if (k >= 0) {
      // d/dz [F(|z|^2) z^m] = G zbar z^m + m F z^(m-1);  d/dzbar = G z^(m+1)
      out.dz += c * G * zb * zpow[m];
      if (m > 0) out.dz += c * (m * F) * zpow[m - 1];
      out.dzbar += c * G * zpow[m + 1];
    } else {
      // d/dz [F(|z|^2) zbar^m] = G zbar^(m+1);  d/dzbar = G z zbar^m + m F zbar^(m-1)
      out.dz += c * G * zbpow[m + 1];
      out.dzbar += c * G * z * zbpow[m];
      out.dzbar += c * (m * F) * zbpow[m - 1];
    }
  }
  return out;
}

Dilations dilations(const WirtingerPair& pair) noexcept {
  const double p = std::abs(pair.dz);
  const double q = std::abs(pair.dzbar);
  return {p + q, std::abs(p - q), p * p - q * q};
}

double sup_Lambda(const AlphaHarmonicMap& map, const PolarGrid& grid) {
  if (grid.radial < 8 || grid.angular < 16) {
    throw DomainError("sup_Lambda needs at least 8 radial and 16 angular samples");
  }
  if (!(grid.r_max > 0.0 && grid.r_max < 1.0)) {
    throw DomainError("sup_Lambda needs 0 < r_max < 1");
  }
  std::vector<Complex> unit(grid.angular);
  for (int j = 0; j < grid.angular; ++j) {
    unit[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / grid.angular);
  }
  double best = 0.0;
  for (int i = 0; i < grid.radial; ++i) {
    const double r = grid.r_max * i / (grid.radial - 1);
    const RadialFactors factors = radial_factors(map, r * r);
    for (const Complex& u : unit) {
      best = std::max(best, dilations(wirtinger(map, factors, r * u)).Lambda);
    }
  }
  return best;
}

double kernel_constant(double alpha) {
  if (!(alpha > -1.0)) throw DomainError("kernel requires alpha > -1");
  const double g = special::gamma(alpha / 2.0 + 1.0);
  return g * g / special::gamma(1.0 + alpha);
}

double kernel(double alpha, Complex z) {
  require_inside_disc(z, "kernel");
  const double w = 1.0 - std::norm(z);
  return kernel_constant(alpha) * std::pow(w, alpha + 1.0) / std::pow(std::abs(1.0 - z), alpha + 2.0);
}

BoundaryData::BoundaryData(std::vector<Complex> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 4) {
    throw DomainError("boundary data needs at least 4 samples, got " + std::to_string(samples_.size()));
  }
}

Complex poisson_solve(double alpha, const BoundaryData& data, Complex z) {
  require_inside_disc(z, "poisson_solve");
  const double c_alpha = kernel_constant(alpha);
  const double w = std::pow(1.0 - std::norm(z), alpha + 1.0);
  const auto n = data.size();
  Complex sum{};
  for (std::size_t j = 0; j < n; ++j) {
    const double tau = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    const Complex rotated = z * std::polar(1.0, -tau);
    sum += data.samples()[j] / std::pow(std::abs(1.0 - rotated), alpha + 2.0);
  }
  return c_alpha * w * sum / static_cast<double>(n);
}

double t_alpha_residual(const AlphaHarmonicMap& map, Complex z, double h) {
  if (!(h >= 1e-6 && h <= 1e-2)) {
    throw DomainError("t_alpha_residual step must lie in [1e-6, 1e-2], got " + std::to_string(h));
  }
  if (!(std::abs(z) + 2.0 * h < 1.0)) {
    throw DomainError("t_alpha_residual stencil leaves the unit disc");
  }
  const double x = z.real();
  const double y = z.imag();
  // Offsets are taken from the rounded nodes so that the stencil is exact in
  // floating point; both sides agree with h up to one ulp.
  const double xp = x + h, xm = x - h, yp = y + h, ym = y - h;
  const double hxp = xp - x, hxm = x - xm, hyp = yp - y, hym = y - ym;

  const Complex f0 = evaluate(map, z);
  const Complex fxp = evaluate(map, {xp, y});
  const Complex fxm = evaluate(map, {xm, y});
  const Complex fyp = evaluate(map, {x, yp});
  const Complex fym = evaluate(map, {x, ym});

  const Complex fx = (fxp - fxm) / (hxp + hxm);
  const Complex fy = (fyp - fym) / (hyp + hym);
  const Complex fxx = 2.0 * ((fxp - f0) / hxp - (f0 - fxm) / hxm) / (hxp + hxm);
  const Complex fyy = 2.0 * ((fyp - f0) / hyp - (f0 - fym) / hym) / (hyp + hym);
  const Complex I{0.0, 1.0};
  const Complex fz = 0.5 * (fx - I * fy);
  const Complex fzb = 0.5 * (fx + I * fy);

  const double alpha = map.alpha();
  const double w = 1.0 - std::norm(z);
  const double w_a1 = std::pow(w, -alpha - 1.0);
  const Complex residual = -(alpha * alpha / 4.0) * w_a1 * f0 +
                           (alpha / 2.0) * w_a1 * (z * fz + std::conj(z) * fzb) +
                           0.25 * std::pow(w, -alpha) * (fxx + fyy);
  return std::abs(residual);
}

}  // namespace alphaland
