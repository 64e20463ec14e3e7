#include "alphaland/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>

#include "CLI11.hpp"
#include "alphaland/alphamap.hpp"
#include "alphaland/coefficients.hpp"
#include "alphaland/errors.hpp"
#include "alphaland/io.hpp"
#include "alphaland/landau.hpp"
#include "alphaland/verify.hpp"
#include "json.hpp"

namespace alphaland::cli {

namespace {

using nlohmann::json;

constexpr const char* kSeedEnv = "ALPHA_LANDAU_SEED";

Complex parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw DomainError("--z expects re,im but got \"" + text + "\"");
  const auto parse = [&](std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
      throw DomainError("--z expects re,im but got \"" + text + "\"");
    }
    return v;
  };
  const std::string_view view(text);
  return {parse(view.substr(0, comma)), parse(view.substr(comma + 1))};
}

std::uint64_t parse_seed(const std::string& text, const char* source) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw DomainError(std::string(source) + " must be an unsigned 64-bit integer, got \"" + text + "\"");
  }
  return v;
}

json complex_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}, {"str", io::format_complex(z)}}; }

json landau_json(const landau::LandauResult& r) {
  return {{"a", r.a},
          {"rho0", r.rho0},
          {"R0_lower", r.r0_lower},
          {"phi_residual", r.phi_residual},
          {"iterations", r.iterations},
          {"positive_R0", r.positive_r0()}};
}

AlphaHarmonicMap load_spectrum(const std::string& path) { return io::parse_spectrum(io::read_file(path)); }

struct Options {
  double alpha = 0.0;
  double beta = 0.0;
  double Lambda = 0.0;
  bool normalized = false;

  double alpha_min = 0.0;
  double alpha_max = 0.0;
  int steps = 0;

  std::string spectrum;
  std::string boundary;
  std::string z;
  double h = 1e-3;
  int k = 0;
  double r = 0.7;
  std::optional<int> n;
  std::optional<double> Lambda_opt;
  std::optional<double> beta_opt;
  int term_n = 1;

  bool generate = false;
  int max_index = 3;
  int samples = 2000;
  int boundary_points = 1024;
  std::optional<std::string> seed;
  std::string emit_spectrum;
};

void cmd_radii(const Options& o, std::ostream& out) {
  const landau::LandauInput input(o.alpha, o.beta, o.Lambda);
  const auto result = o.normalized ? landau::normalized_radii(input) : landau::solve_rho0(input);
  out << landau_json(result).dump() << '\n';
}

void cmd_sweep(const Options& o, std::ostream& out) {
  if (!(o.alpha_min > 0.0 && o.alpha_max < 2.0 && o.alpha_min <= o.alpha_max)) {
    throw DomainError("sweep range must satisfy 0 < alpha-min <= alpha-max < 2");
  }
  if (o.steps < 2) throw DomainError("sweep needs steps >= 2");
  std::vector<io::SweepRow> rows;
  rows.reserve(static_cast<std::size_t>(o.steps));
  for (int i = 0; i < o.steps; ++i) {
    const double alpha = o.alpha_min + (o.alpha_max - o.alpha_min) * i / (o.steps - 1);
    io::SweepRow row{alpha, std::nullopt, std::nullopt, std::nullopt, {}};
    try {
      const auto result = landau::solve_rho0(landau::LandauInput(alpha, o.beta, o.Lambda));
      row.a = result.a;
      row.rho0 = result.rho0;
      row.r0_lower = result.r0_lower;
    } catch (const Error& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  out << io::format_sweep_csv(rows);
}

void cmd_eval(const Options& o, std::ostream& out) {
  const auto map = load_spectrum(o.spectrum);
  const Complex z = parse_point(o.z);
  if (std::abs(z) >= 1.0) throw DomainError("--z must lie in the open unit disc");
  const Complex f = evaluate(map, z);
  out << json{{"z", complex_json(z)}, {"f", complex_json(f)}}.dump() << '\n';
}

void cmd_derivs(const Options& o, std::ostream& out) {
  const auto map = load_spectrum(o.spectrum);
  const Complex z = parse_point(o.z);
  if (std::abs(z) >= 1.0) throw DomainError("--z must lie in the open unit disc");
  const auto pair = wirtinger(map, z);
  const auto d = dilations(pair);
  const double residual = t_alpha_residual(map, z, o.h);
  out << json{{"z", complex_json(z)},         {"dz", complex_json(pair.dz)}, {"dzbar", complex_json(pair.dzbar)},
              {"Lambda", d.Lambda},           {"lambda", d.lambda},          {"jacobian", d.jacobian},
              {"t_alpha_residual", residual}, {"h", o.h}}
             .dump()
      << '\n';
}

void cmd_extract(const Options& o, std::ostream& out) {
  const auto map = load_spectrum(o.spectrum);
  if (o.k < 0) throw DomainError("--k must be non-negative");
  const int n = o.n.value_or(coeff::default_extraction_points(std::max(o.k, map.spectrum().max_index())));
  const auto result = coeff::extract(map, o.k, o.r, n);
  out << json{{"k", result.k},
              {"c_plus", complex_json(result.c_plus)},
              {"c_minus", complex_json(result.c_minus)},
              {"r", result.radius},
              {"n", result.quadrature_points},
              {"g_factor", coeff::g_factor(o.k, map.alpha(), o.r)}}
             .dump()
      << '\n';
}

void cmd_check_bound(const Options& o, std::ostream& out) {
  const auto map = load_spectrum(o.spectrum);
  const double alpha = map.alpha();
  if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("check-bound requires alpha in (0,2)");
  if (o.k < 1) throw DomainError("--k must be at least 1");
  const double Lambda = o.Lambda_opt ? *o.Lambda_opt : 1.01 * sup_Lambda(map);
  const auto& spec = map.spectrum();
  const double cp = std::abs(spec.at(o.k));
  const double cm = std::abs(spec.at(-o.k));
  const double lhs = coeff::coefficient_estimate_lhs(o.k, alpha, cp, cm);
  const auto term = coeff::series_term_bound(o.k, alpha, o.term_n);
  json doc{{"k", o.k},
           {"lhs", lhs},
           {"Lambda_est", Lambda},
           {"holds", lhs <= Lambda},
           {"coefficient_sum", cp + cm},
           {"coefficient_bound", coeff::coefficient_bound(o.k, alpha, Lambda)},
           {"term_bound", {{"n", o.term_n}, {"lhs", term.lhs}, {"rhs", term.rhs}}}};
  out << doc.dump() << '\n';
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return parse_seed(*o.seed, "--seed");
  if (const char* env = std::getenv(kSeedEnv); env != nullptr) return parse_seed(env, kSeedEnv);
  return 0;
}

void cmd_verify(const Options& o, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(o);
  std::optional<AlphaHarmonicMap> map;
  std::string digest;
  verify::VerifyOptions vo{};
  vo.n_samples = o.samples;
  vo.n_boundary = o.boundary_points;
  vo.seed = seed;
  if (o.generate) {
    if (!o.spectrum.empty()) throw DomainError("--generate and --spectrum are mutually exclusive");
    if (!o.beta_opt || !o.Lambda_opt) throw DomainError("--generate needs --alpha, --beta and --Lambda");
    verify::AdmissibleMapRequest req;
    req.alpha = o.alpha;
    req.beta = *o.beta_opt;
    req.Lambda = *o.Lambda_opt;
    req.max_index = o.max_index;
    req.seed = seed;
    map = verify::random_admissible_map(req);
    const std::string text = io::spectrum_to_json(*map);
    digest = io::sha256_hex(text);
    if (!o.emit_spectrum.empty()) {
      std::ofstream file(o.emit_spectrum, std::ios::binary);
      if (!(file << text << '\n')) throw DomainError("cannot write " + o.emit_spectrum);
    }
    vo.beta = req.beta;
    vo.Lambda = req.Lambda;
  } else {
    if (o.spectrum.empty()) throw DomainError("verify needs --spectrum FILE or --generate");
    const std::string text = io::read_file(o.spectrum);
    map = io::parse_spectrum(text);
    digest = io::sha256_hex(text);
    vo.beta = o.beta_opt ? *o.beta_opt : dilations(wirtinger(*map, Complex{0.0, 0.0})).lambda;
    vo.Lambda = o.Lambda_opt ? *o.Lambda_opt : 1.01 * sup_Lambda(*map, verify::kRecheckGrid);
  }
  const auto report = verify::verify_map(*map, digest, vo);
  out << io::report_to_json(report) << '\n';
}

void cmd_poisson(const Options& o, std::ostream& out) {
  const auto data = io::parse_boundary(io::read_file(o.boundary));
  const Complex z = parse_point(o.z);
  const Complex f = poisson_solve(o.alpha, data, z);
  out << json{{"z", complex_json(z)}, {"f", complex_json(f)}, {"kernel", kernel(o.alpha, z)}}.dump() << '\n';
}

void cmd_m_constant(std::ostream& out) {
  const auto m = landau::classical_m_constant();
  out << json{{"r_star", m.r_star}, {"m", m.m}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerics for alpha-harmonic maps: series, coefficient bounds and Landau radii", "alphaland"};
  app.require_subcommand(1, 1);
  Options o;

  auto* radii = app.add_subcommand("radii", "Univalence radius rho0 and schlicht radius bound");
  radii->add_option("--alpha", o.alpha)->required();
  radii->add_option("--beta", o.beta)->required();
  radii->add_option("--Lambda", o.Lambda)->required();
  radii->add_flag("--normalized", o.normalized, "Reduce to (beta/Lambda, 1)");

  auto* sweep = app.add_subcommand("sweep", "CSV of radii over an alpha grid");
  sweep->add_option("--alpha-min", o.alpha_min)->required();
  sweep->add_option("--alpha-max", o.alpha_max)->required();
  sweep->add_option("--steps", o.steps)->required();
  sweep->add_option("--beta", o.beta)->required();
  sweep->add_option("--Lambda", o.Lambda)->required();

  auto* eval = app.add_subcommand("eval", "Evaluate f at a point");
  eval->add_option("--spectrum", o.spectrum)->required();
  eval->add_option("--z", o.z)->required();

  auto* derivs = app.add_subcommand("derivs", "Wirtinger derivatives, dilations and PDE residual");
  derivs->add_option("--spectrum", o.spectrum)->required();
  derivs->add_option("--z", o.z)->required();
  derivs->set_help_flag("--help", "Print this help message and exit");
  derivs->add_option("--h", o.h, "Finite-difference step for the residual");

  auto* extract = app.add_subcommand("extract", "Recover c_k and c_{-k} from f_z on a circle");
  extract->add_option("--spectrum", o.spectrum)->required();
  extract->add_option("--k", o.k)->required();
  extract->add_option("--r", o.r);
  extract->add_option("--n", o.n);

  auto* check = app.add_subcommand("check-bound", "Coefficient bound for index k");
  check->add_option("--spectrum", o.spectrum)->required();
  check->add_option("--k", o.k)->required();
  check->add_option("--Lambda", o.Lambda_opt, "Defaults to 1.01 times the grid sup of Lambda_f");
  check->add_option("--n", o.term_n, "Term index for the series term bound");

  auto* verify_cmd = app.add_subcommand("verify", "Sampled injectivity and schlicht-disc checks");
  verify_cmd->add_option("--spectrum", o.spectrum);
  verify_cmd->add_flag("--generate", o.generate, "Use a random admissible map");
  verify_cmd->add_option("--alpha", o.alpha);
  verify_cmd->add_option("--beta", o.beta_opt);
  verify_cmd->add_option("--Lambda", o.Lambda_opt);
  verify_cmd->add_option("--max-index", o.max_index);
  verify_cmd->add_option("--samples", o.samples);
  verify_cmd->add_option("--boundary", o.boundary_points);
  verify_cmd->add_option("--seed", o.seed);
  verify_cmd->add_option("--emit-spectrum", o.emit_spectrum, "Write the generated spectrum here");

  auto* poisson = app.add_subcommand("poisson", "Solve the Dirichlet problem from boundary samples");
  poisson->add_option("--alpha", o.alpha)->required();
  poisson->add_option("--boundary", o.boundary)->required();
  poisson->add_option("--z", o.z)->required();

  auto* mconst = app.add_subcommand("m-constant", "Classical Landau constant m");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }

  try {
    if (radii->parsed()) cmd_radii(o, out);
    else if (sweep->parsed()) cmd_sweep(o, out);
    else if (eval->parsed()) cmd_eval(o, out);
    else if (derivs->parsed()) cmd_derivs(o, out);
    else if (extract->parsed()) cmd_extract(o, out);
    else if (check->parsed()) cmd_check_bound(o, out);
    else if (verify_cmd->parsed()) cmd_verify(o, out);
    else if (poisson->parsed()) cmd_poisson(o, out);
    else if (mconst->parsed()) cmd_m_constant(out);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const AccuracyError& e) {
    err << "accuracy error: " << e.what() << '\n';
    return kExitAccuracy;
  } catch (const BoundaryError& e) {
    err << "accuracy error: " << e.what() << '\n';
    return kExitAccuracy;
  } catch (const ConstructionError& e) {
    err << "construction error: " << e.what() << '\n';
    return kExitAccuracy;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}

}  // namespace alphaland::cli
