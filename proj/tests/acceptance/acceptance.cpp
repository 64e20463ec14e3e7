// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Optional arguments select criteria by number, e.g. `acceptance 2 8`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "alphaland/alphamap.hpp"
#include "alphaland/coefficients.hpp"
#include "alphaland/errors.hpp"
#include "alphaland/landau.hpp"
#include "alphaland/specialfns.hpp"
#include "alphaland/verify.hpp"

using namespace alphaland;

namespace {

struct Verdict {
  bool ok = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Verdict()> run;
};

std::string fmt(const char* format, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, format, a, b, c);
  return buf;
}

double rel_err(double got, double want) {
  const double scale = std::abs(want);
  return scale == 0.0 ? std::abs(got) : std::abs(got - want) / scale;
}

const std::vector<double> kAB = {-1.0, -0.5, 0.5, 1.5};

// --- 1 -------------------------------------------------------------------------

Verdict classical_constant() {
  const auto m = landau::classical_m_constant();
  return {std::abs(m.m - 6.85) <= 0.005, fmt("m = %.12f at r* = %.10f", m.m, m.r_star)};
}

// --- 2 -------------------------------------------------------------------------

Verdict gauss_summation() {
  special::SeriesOptions budget;
  budget.max_terms = 20'000'000;
  const double x = 1.0 - 1e-6;
  double worst_gap = 0.0, worst_rel = 0.0;
  int cases = 0;
  for (double a : kAB) {
    for (double b : kAB) {
      for (int c = 1; c <= 8; ++c) {
        if (c - a - b < 0.5) continue;
        const special::HypParams p(a, b, c);
        const double at_one = special::hyp2f1_at_one(p);
        worst_gap = std::max(worst_gap, std::abs(special::hyp2f1(p, x, budget) - at_one));
        const double oracle = std::tgamma(c) * std::tgamma(c - a - b) / (std::tgamma(c - a) * std::tgamma(c - b));
        worst_rel = std::max(worst_rel, rel_err(at_one, oracle));
        ++cases;
      }
    }
  }
  return {worst_gap <= 1e-4 && worst_rel <= 1e-10,
          fmt("%g cases, max |F(1-1e-6) - F(1)| = %.3e, max rel vs Gamma ratio = %.3e", cases, worst_gap, worst_rel)};
}

// --- 3 -------------------------------------------------------------------------

Verdict derivative_identity() {
  double worst = 0.0, worst_identity = 0.0;
  int cases = 0;
  for (double a : kAB) {
    for (double b : kAB) {
      for (int c = 1; c <= 8; ++c) {
        const special::HypParams p(a, b, c);
        const auto F = [&](double x) { return special::hyp2f1(p, x); };
        for (int i = 0; i <= 9; ++i) {
          const double x = 0.1 * i;
          double fd;
          if (i == 0) {
            const double h = 1e-4;
            fd = (-3.0 * F(0.0) + 4.0 * F(h) - F(2.0 * h)) / (2.0 * h);
          } else {
            const double h = 1e-3;
            fd = (F(x - 2 * h) - 8 * F(x - h) + 8 * F(x + h) - F(x + 2 * h)) / (12 * h);
          }
          const double d = special::hyp2f1_derivative(p, x);
          const double identity = a * b / c * special::hyp2f1(p.shifted(), x);
          worst = std::max(worst, rel_err(fd, d));
          worst_identity = std::max(worst_identity, rel_err(d, identity));
          ++cases;
        }
      }
    }
  }
  return {worst <= 1e-5 && worst_identity <= 1e-12,
          fmt("%g points, max rel finite-difference gap = %.3e, identity gap = %.3e", cases, worst, worst_identity)};
}

// --- 4 -------------------------------------------------------------------------

AlphaHarmonicMap random_spectrum(std::mt19937_64& rng, double alpha, int K, double lo, double hi) {
  std::uniform_real_distribution<double> modulus(lo, hi), angle(0.0, 2.0 * std::numbers::pi);
  std::vector<std::pair<int, Complex>> c;
  for (int k = -K; k <= K; ++k) c.emplace_back(k, std::polar(modulus(rng), angle(rng)));
  return AlphaHarmonicMap(alpha, CoefficientSpectrum(c));
}

Verdict pde_residual() {
  std::mt19937_64 rng(20240401);
  std::uniform_int_distribution<int> order(1, 5);
  std::uniform_real_distribution<double> radius(0.05, 0.8), angle(0.0, 2.0 * std::numbers::pi);
  double worst_order = std::numeric_limits<double>::infinity();
  int checks = 0;
  for (double alpha : {0.5, 1.0, 1.5}) {
    for (int s = 0; s < 10; ++s) {
      const auto map = random_spectrum(rng, alpha, order(rng), 0.0, 1.0);
      for (int p = 0; p < 5; ++p) {
        const Complex z = std::polar(radius(rng), angle(rng));
        const double coarse = t_alpha_residual(map, z, 8e-3);
        const double fine = t_alpha_residual(map, z, 4e-3);
        worst_order = std::min(worst_order, std::log2(coarse / fine));
        ++checks;
      }
    }
  }
  return {worst_order >= 1.8, fmt("%g point checks, min observed order = %.4f", checks, worst_order)};
}

// --- 5 -------------------------------------------------------------------------

Verdict extraction_round_trip() {
  std::mt19937_64 rng(777);
  std::uniform_real_distribution<double> alpha_dist(0.05, 1.95);
  std::uniform_int_distribution<int> order(1, 8);
  double worst = 0.0;
  int recoveries = 0;
  for (int s = 0; s < 50; ++s) {
    const int K = order(rng);
    const auto map = random_spectrum(rng, alpha_dist(rng), K, 0.5, 1.5);
    const int n = coeff::default_extraction_points(K);
    for (double r : {0.3, 0.5, 0.7, 0.9}) {
      for (int k = 1; k <= K; ++k) {
        const auto res = coeff::extract(map, k, r, n);
        const double ep = std::abs(res.c_plus - map.spectrum().at(k)) / std::abs(map.spectrum().at(k));
        const double em = std::abs(res.c_minus - map.spectrum().at(-k)) / std::abs(map.spectrum().at(-k));
        worst = std::max({worst, ep, em});
        recoveries += 2;
      }
    }
  }
  return {worst <= 1e-8, fmt("%g coefficients recovered, max rel error = %.3e", recoveries, worst)};
}

// --- 6 -------------------------------------------------------------------------

Verdict coefficient_bound() {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> alpha_dist(0.05, 1.95), beta_dist(0.2, 0.8);
  std::uniform_int_distribution<int> order(2, 6);
  double worst_ratio = 0.0, worst_closed_form = 0.0;
  int violations = 0, checks = 0;
  for (int s = 0; s < 50; ++s) {
    verify::AdmissibleMapRequest req;
    req.alpha = alpha_dist(rng);
    req.beta = beta_dist(rng);
    req.Lambda = 1.0;
    req.max_index = order(rng);
    req.seed = rng();
    req.higher_order_weight = 1.0;
    const auto map = verify::random_admissible_map(req);
    const double Lambda = 1.01 * sup_Lambda(map);
    for (int k = 1; k <= map.spectrum().max_index(); ++k) {
      const double cp = std::abs(map.spectrum().at(k)), cm = std::abs(map.spectrum().at(-k));
      const double lhs = coeff::coefficient_estimate_lhs(k, req.alpha, cp, cm);
      if (lhs > Lambda) ++violations;
      worst_ratio = std::max(worst_ratio, lhs / Lambda);
      const double threshold = Lambda / coeff::coefficient_estimate_lhs(k, req.alpha, 1.0, 0.0);
      worst_closed_form = std::max(worst_closed_form, rel_err(coeff::coefficient_bound(k, req.alpha, Lambda), threshold));
      ++checks;
    }
  }
  return {violations == 0 && worst_closed_form <= 1e-12,
          fmt("%g (map, k) checks, %g violations, max lhs/Lambda = %.4f; ", checks, violations, worst_ratio) +
              fmt("closed form vs threshold max rel = %.3e", worst_closed_form)};
}

// --- 7 -------------------------------------------------------------------------

Verdict term_bound() {
  double worst_excess = -std::numeric_limits<double>::infinity();
  int checks = 0;
  for (int i = 1; i <= 50; ++i) {
    const double alpha = 2.0 * i / 51.0;
    for (int k = 1; k <= 10; ++k) {
      for (int n = 1; n <= 30; ++n) {
        const auto b = coeff::series_term_bound(k, alpha, n);
        worst_excess = std::max(worst_excess, b.lhs - b.rhs);
        ++checks;
      }
    }
  }
  return {worst_excess <= 1e-12, fmt("%g (k, n, alpha) triples, max lhs - rhs = %.3e", checks, worst_excess)};
}

// --- 8 -------------------------------------------------------------------------

// Coarse 1e6-cell scan on [0, 1) then 1e4 sub-cells inside the sign-change cell.
double grid_scan_root(const landau::LandauInput& in) {
  constexpr int kCoarse = 1'000'000, kFine = 10'000;
  int i = 1;
  while (i < kCoarse && landau::phi(in, double(i) / kCoarse) >= 0) ++i;
  const double lo = double(i - 1) / kCoarse, step = 1.0 / kCoarse / kFine;
  for (int j = 1; j <= kFine; ++j) {
    if (landau::phi(in, lo + j * step) < 0) return lo + (j - 0.5) * step;
  }
  return lo + 1.0 / kCoarse;
}

Verdict phi_root_properties() {
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> alpha_dist(0.01, 1.99), log_dist(-1.0, 1.0);
  int not_decreasing = 0, bad_sign_changes = 0;
  double worst_residual = 0.0, worst_oracle = 0.0, worst_homogeneity = 0.0;
  for (int s = 0; s < 200; ++s) {
    const double alpha = alpha_dist(rng);
    const double beta = std::pow(10.0, log_dist(rng));
    const double Lambda = std::pow(10.0, log_dist(rng));
    const landau::LandauInput in(alpha, beta, Lambda);

    int sign_changes = 0;
    double prev = landau::phi(in, 0.0);
    for (int i = 1; i < 1000; ++i) {
      const double value = landau::phi(in, 0.999 * i / 999.0);
      if (!(value < prev)) ++not_decreasing;
      if ((value < 0) != (prev < 0)) ++sign_changes;
      prev = value;
    }
    // A root beyond 0.999 is still a single crossing on [0, 1).
    if (sign_changes > 1 || (sign_changes == 0 && prev < 0)) ++bad_sign_changes;

    const auto res = landau::solve_rho0(in);
    worst_residual = std::max(worst_residual, std::abs(landau::phi(in, res.rho0)) / (1.0 + beta));
    worst_oracle = std::max(worst_oracle, std::abs(res.rho0 - grid_scan_root(in)));
    for (double t : {0.5, 2.0, 10.0}) {
      const double scaled = landau::solve_rho0({alpha, t * beta, t * Lambda}).rho0;
      worst_homogeneity = std::max(worst_homogeneity, std::abs(scaled - res.rho0));
    }
  }
  const bool ok = not_decreasing == 0 && bad_sign_changes == 0 && worst_residual <= 1e-12 && worst_oracle <= 1e-9 &&
                  worst_homogeneity <= 1e-12;
  return {ok, fmt("monotonicity failures %g, sign-change failures %g, ", not_decreasing, bad_sign_changes) +
                  fmt("max |phi(rho0)|/(1+beta) = %.3e, max oracle gap = %.3e, max homogeneity gap = %.3e",
                      worst_residual, worst_oracle, worst_homogeneity)};
}

// --- 9 -------------------------------------------------------------------------

Verdict end_to_end() {
  const std::vector<double> alphas = {0.5, 1.0, 1.5};
  const std::vector<double> betas = {0.3, 0.5, 0.7};
  std::int64_t collisions = 0;
  int misses = 0, hypothesis_failures = 0, positive = 0;
  for (int s = 0; s < 20; ++s) {
    verify::AdmissibleMapRequest req;
    req.alpha = alphas[s % 3];
    req.beta = betas[(s / 3) % 3];
    req.Lambda = 1.0;
    req.max_index = 2 + s % 4;
    req.seed = 1000 + s;
    const auto map = verify::random_admissible_map(req);
    const auto report = verify::verify_map(map, "generated", {req.beta, req.Lambda, 2000, 1024, req.seed});
    collisions += report.collisions;
    if (report.r0 > 0) ++positive;
    misses += report.coverage_misses;
    if (!report.hypothesis_ok) ++hypothesis_failures;
  }
  const AlphaHarmonicMap control(0.0, CoefficientSpectrum({{1, 1.0}, {-1, 1.0}}));
  const auto degenerate = verify::check_injectivity(control, 0.5, 2000, 0);
  const bool ok = collisions == 0 && misses == 0 && hypothesis_failures == 0 && degenerate.collisions > 0;
  return {ok, fmt("20 maps: collisions %g, coverage misses %g (R0 > 0 for %g maps), ", double(collisions), misses,
                  positive) +
                  fmt("hypothesis failures %g; control 2Re z collisions %g", hypothesis_failures,
                      double(degenerate.collisions))};
}

// --- 10 ------------------------------------------------------------------------

Verdict a_range() {
  int outside = 0;
  double lo = std::numeric_limits<double>::infinity(), hi = -lo, first_bad = 0.0, last_bad = 0.0;
  for (int i = 1; i <= 1000; ++i) {
    const double alpha = 2.0 * i / 1001.0;
    const double a = landau::a_constant(alpha);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
    if (!(a > 0.5 && a < 1.0)) {
      if (outside == 0) first_bad = alpha;
      last_bad = alpha;
      ++outside;
    }
  }
  std::string detail = fmt("a ranges over [%.6f, %.6f]; %g grid points outside (1/2, 1)", lo, hi, outside);
  if (outside > 0) detail += fmt(" for alpha in [%.4f, %.4f]", first_bad, last_bad);
  return {outside == 0, detail};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "classical Landau constant m", 1.0, classical_constant},
      {2, "Gauss summation at x = 1", 5.0, gauss_summation},
      {3, "hypergeometric derivative identity", 5.0, derivative_identity},
      {4, "second-order PDE residual", 30.0, pde_residual},
      {5, "coefficient extraction round trip", 30.0, extraction_round_trip},
      {6, "coefficient bound and closed form", 60.0, coefficient_bound},
      {7, "series term bound", 10.0, term_bound},
      {8, "phi monotonicity, root and homogeneity", 30.0, phi_root_properties},
      {9, "univalence and schlicht disc end to end", 120.0, end_to_end},
      {10, "range of the constant a", 1.0, a_range},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = v.ok && in_time;
    if (!pass) ++failures;
    std::printf("AC%-2d %s  %s: %s [%.2f s of %.0f s%s]\n", c.id, pass ? "PASS" : "FAIL", c.name, v.detail.c_str(),
                seconds, c.budget_seconds, in_time ? "" : ", over budget");
    std::fflush(stdout);
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
