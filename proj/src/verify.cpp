#include "alphaland/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

#include "alphaland/errors.hpp"
#include "alphaland/landau.hpp"

namespace alphaland::verify {

namespace {

constexpr int kMaxAttempts = 100;
constexpr double kScaleMargin = 1.01;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Uniform integer in [0, n) by rejection.
std::uint64_t uniform_index(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return v % n;
}

struct Sample {
  Complex z;
  Complex f;
};

std::vector<Sample> sample_disc(const AlphaHarmonicMap& map, double rho0, int n_samples, std::mt19937_64& rng) {
  const int rings = std::max(1, static_cast<int>(std::ceil(std::sqrt(n_samples / std::numbers::pi))));
  // Ring i gets a share of the points proportional to its mean radius.
  double weight_total = 0.0;
  for (int i = 1; i <= rings; ++i) weight_total += i - 0.5;
  std::vector<int> counts(rings);
  int assigned = 0;
  for (int i = 1; i <= rings; ++i) {
    counts[i - 1] = std::max(1, static_cast<int>(std::floor(n_samples * (i - 0.5) / weight_total)));
    assigned += counts[i - 1];
  }
  counts.back() += std::max(0, n_samples - assigned);

  std::vector<Sample> out;
  out.reserve(n_samples);
  for (int i = 1; i <= rings && static_cast<int>(out.size()) < n_samples; ++i) {
    const double jitter = 0.5 * (unit_uniform(rng) - 0.5);
    const double r = rho0 * std::sqrt((i - 0.5 + jitter) / rings);
    const RadialFactors factors = radial_factors(map, r * r);
    const int m = counts[i - 1];
    for (int j = 0; j < m && static_cast<int>(out.size()) < n_samples; ++j) {
      const Complex z = std::polar(r, kTwoPi * j / m);
      out.push_back({z, evaluate(map, factors, z)});
    }
  }
  return out;
}

}  // namespace

AlphaHarmonicMap random_admissible_map(const AdmissibleMapRequest& req) {
  if (!(req.alpha > 0.0 && req.alpha < 2.0)) throw DomainError("generator requires alpha in (0, 2)");
  if (!(req.beta > 0.0 && req.Lambda > 0.0)) throw DomainError("generator requires beta > 0 and Lambda > 0");
  if (req.beta > req.Lambda) {
    throw DomainError("generator requires beta <= Lambda since lambda_f(0) <= Lambda_f(0) <= Lambda");
  }
  if (req.max_index < 1) throw DomainError("generator requires max_index >= 1");
  if (req.higher_order_weight < 0.0) throw DomainError("higher_order_weight must be non-negative");

  std::mt19937_64 rng(req.seed);
  double weight = req.higher_order_weight;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt, weight *= 0.8) {
    std::vector<std::pair<int, Complex>> entries;
    Complex c_minus_one{};
    for (int k = -req.max_index; k <= req.max_index; ++k) {
      if (k == 0 || k == 1) continue;
      const double modulus = weight * req.beta * unit_uniform(rng) / (double(k) * k);
      const Complex c = std::polar(modulus, kTwoPi * unit_uniform(rng));
      if (k == -1) c_minus_one = c;
      if (modulus > 0.0) entries.emplace_back(k, c);
    }
    const double c1 = req.beta + std::abs(c_minus_one) + weight * req.beta * unit_uniform(rng);
    entries.emplace_back(1, Complex{c1, 0.0});

    AlphaHarmonicMap candidate(req.alpha, CoefficientSpectrum(entries));
    const double sup = sup_Lambda(candidate, kGeneratorGrid);
    if (sup * kScaleMargin > req.Lambda) {
      const double scale = req.Lambda / (kScaleMargin * sup);
      candidate = AlphaHarmonicMap(req.alpha, candidate.spectrum().scaled(scale));
    }
    const auto& s = candidate.spectrum();
    if (std::abs(s.at(1)) - std::abs(s.at(-1)) >= req.beta) return candidate;
  }
  throw ConstructionError("no admissible map found in " + std::to_string(kMaxAttempts) + " attempts");
}

InjectivityResult check_injectivity(const AlphaHarmonicMap& map, double rho0, int n_samples, std::uint64_t seed) {
  if (!(rho0 > 0.0 && rho0 < 1.0)) throw DomainError("check_injectivity requires rho0 in (0, 1)");
  if (n_samples < 2) throw DomainError("check_injectivity needs at least 2 samples");
  std::mt19937_64 rng(seed);
  const std::vector<Sample> pts = sample_disc(map, rho0, n_samples, rng);
  const auto n = static_cast<std::int64_t>(pts.size());

  InjectivityResult out{std::numeric_limits<double>::infinity(), 0, 0, static_cast<int>(n)};
  const auto visit = [&](std::int64_t i, std::int64_t j) {
    const double dz = std::abs(pts[i].z - pts[j].z);
    const double df = std::abs(pts[i].f - pts[j].f);
    ++out.pairs_checked;
    if (dz > 0.0) out.min_pair_separation = std::min(out.min_pair_separation, df / dz);
    if (dz > kCollisionDomainDistance && df < kCollisionImageDistance) ++out.collisions;
  };

  if (n * (n - 1) / 2 <= kMaxPairs) {
    for (std::int64_t i = 0; i < n; ++i) {
      for (std::int64_t j = i + 1; j < n; ++j) visit(i, j);
    }
  } else {
    for (std::int64_t p = 0; p < kMaxPairs; ++p) {
      const auto i = static_cast<std::int64_t>(uniform_index(rng, n));
      auto j = static_cast<std::int64_t>(uniform_index(rng, n - 1));
      if (j >= i) ++j;
      visit(i, j);
    }
  }
  return out;
}

int check_schlicht(const AlphaHarmonicMap& map, double rho0, double r0, int n_boundary) {
  if (!(rho0 > 0.0 && rho0 < 1.0)) throw DomainError("check_schlicht requires rho0 in (0, 1)");
  if (n_boundary < 1) throw DomainError("check_schlicht needs at least one boundary point");
  if (r0 <= 0.0) return 0;
  const double r = rho0 * (1.0 - 1e-9);
  const RadialFactors factors = radial_factors(map, r * r);
  const Complex center = evaluate(map, 0.0);
  int misses = 0;
  for (int j = 0; j < n_boundary; ++j) {
    const Complex z = std::polar(r, kTwoPi * j / n_boundary);
    if (std::abs(evaluate(map, factors, z) - center) < r0) ++misses;
  }
  return misses;
}

bool hypotheses_hold(const AlphaHarmonicMap& map, double beta, double Lambda) {
  const auto& s = map.spectrum();
  if (s.at(0) != Complex{}) return false;
  if (dilations(wirtinger(map, 0.0)).lambda < beta) return false;
  return sup_Lambda(map, kRecheckGrid) <= Lambda;
}

VerificationReport verify_map(const AlphaHarmonicMap& map, const std::string& digest, const VerifyOptions& options) {
  const landau::LandauInput input(map.alpha(), options.beta, options.Lambda);
  const landau::LandauResult radii = landau::solve_rho0(input);
  const InjectivityResult inj = check_injectivity(map, radii.rho0, options.n_samples, options.seed);

  VerificationReport report{};
  report.map_digest = digest;
  report.rho0 = radii.rho0;
  report.r0 = radii.r0_lower;
  report.n_samples = inj.n_samples;
  report.min_pair_separation = inj.min_pair_separation;
  report.collisions = inj.collisions;
  report.coverage_misses = check_schlicht(map, radii.rho0, radii.r0_lower, options.n_boundary);
  report.hypothesis_ok = hypotheses_hold(map, options.beta, options.Lambda);
  report.seed = options.seed;
  return report;
}

}  // namespace alphaland::verify
