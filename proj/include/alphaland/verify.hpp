#pragma once

#include <cstdint>
#include <string>

#include "alphaland/alphamap.hpp"

namespace alphaland::verify {

/// Parameters of the admissible-instance generator.
struct AdmissibleMapRequest {
  double alpha = 1.0;
  double beta = 0.5;
  double Lambda = 1.0;
  int max_index = 3;
  std::uint64_t seed = 0;
  /// Scale of the random coefficients besides c_1; zero yields {c_1 = beta}.
  double higher_order_weight = 0.25;
};

/// Grid used by the generator to enforce Lambda_f <= Lambda.
inline constexpr PolarGrid kGeneratorGrid{64, 256, 0.999};
/// Twice as dense in each direction; used for the independent hypothesis recheck.
inline constexpr PolarGrid kRecheckGrid{128, 512, 0.999};

/// Random map with c_0 = 0, lambda_f(0) >= beta and grid sup of Lambda_f <= Lambda.
///
/// Each attempt draws the higher-order coefficients, sets c_1 real with
/// |c_1| - |c_{-1}| >= beta, and rescales the spectrum if the generator grid
/// reports Lambda_f above Lambda / 1.01. Attempts that then miss beta are
/// redrawn with smaller weights; 100 failures throw ConstructionError.
AlphaHarmonicMap random_admissible_map(const AdmissibleMapRequest& request);

struct InjectivityResult {
  double min_pair_separation;  // min |f(z_i) - f(z_j)| / |z_i - z_j|
  std::int64_t collisions;     // |f(z_i) - f(z_j)| < 1e-12 with |z_i - z_j| > 1e-6
  std::int64_t pairs_checked;
  int n_samples;
};

inline constexpr double kCollisionImageDistance = 1e-12;
inline constexpr double kCollisionDomainDistance = 1e-6;
inline constexpr std::int64_t kMaxPairs = 2'000'000;

/// Pairwise collision search over n_samples points of the open disc |z| < rho0.
///
/// Points sit on concentric rings with equispaced angles and seeded radial
/// jitter, so the set is symmetric under conjugation. All pairs are checked
/// when there are at most kMaxPairs of them, otherwise kMaxPairs random pairs.
InjectivityResult check_injectivity(const AlphaHarmonicMap& map, double rho0, int n_samples, std::uint64_t seed);

/// Number of points on |z| = rho0 (1 - 1e-9) whose image lies closer than r0
/// to f(0). Zero when r0 <= 0.
int check_schlicht(const AlphaHarmonicMap& map, double rho0, double r0, int n_boundary);

struct VerificationReport {
  std::string map_digest;
  double rho0;
  double r0;
  int n_samples;
  double min_pair_separation;
  std::int64_t collisions;
  int coverage_misses;
  bool hypothesis_ok;
  std::uint64_t seed;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
  double beta;
  double Lambda;
  int n_samples = 2000;
  int n_boundary = 1024;
  std::uint64_t seed = 0;
};

/// True when c_0 = 0, lambda_f(0) >= beta and the recheck grid keeps Lambda_f <= Lambda.
bool hypotheses_hold(const AlphaHarmonicMap& map, double beta, double Lambda);

/// Landau radii for (alpha, beta, Lambda) followed by both sampled checks.
VerificationReport verify_map(const AlphaHarmonicMap& map, const std::string& digest, const VerifyOptions& options);

}  // namespace alphaland::verify
