#include "alphaland/io.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include "alphaland/errors.hpp"
#include "json.hpp"

namespace alphaland::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string(what) + ": malformed JSON: " + e.what());
  }
}

void require_fields(const json& obj, const std::set<std::string>& allowed, const std::set<std::string>& required,
                    const std::string& where) {
  if (!obj.is_object()) throw DomainError(where + " must be a JSON object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw DomainError(where + ": unknown field \"" + key + "\"");
  }
  for (const auto& key : required) {
    if (!obj.contains(key)) throw DomainError(where + ": missing field \"" + key + "\"");
  }
}

double number_field(const json& obj, const char* key, const std::string& where) {
  const json& v = obj.at(key);
  if (!v.is_number()) throw DomainError(where + ": field \"" + key + "\" must be a number");
  return v.get<double>();
}

std::string format_12g(double v) {
  std::array<char, 64> buf{};
  std::snprintf(buf.data(), buf.size(), "%.12g", v);
  return buf.data();
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.emplace_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& s) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw DomainError("not a number: \"" + s + "\"");
  return v;
}

}  // namespace

AlphaHarmonicMap parse_spectrum(std::string_view json_text) {
  const json doc = parse_json(json_text, "spectrum");
  require_fields(doc, {"alpha", "coefficients"}, {"alpha", "coefficients"}, "spectrum");
  const double alpha = number_field(doc, "alpha", "spectrum");
  const json& list = doc.at("coefficients");
  if (!list.is_array()) throw DomainError("spectrum: \"coefficients\" must be an array");
  std::vector<std::pair<int, Complex>> entries;
  for (const json& item : list) {
    require_fields(item, {"k", "re", "im"}, {"k", "re", "im"}, "spectrum coefficient");
    const json& k = item.at("k");
    if (!k.is_number_integer()) throw DomainError("spectrum coefficient: \"k\" must be an integer");
    entries.emplace_back(k.get<int>(), Complex{number_field(item, "re", "spectrum coefficient"),
                                               number_field(item, "im", "spectrum coefficient")});
  }
  return AlphaHarmonicMap(alpha, CoefficientSpectrum(entries));
}

std::string spectrum_to_json(const AlphaHarmonicMap& map) {
  json coeffs = json::array();
  for (const auto& [k, c] : map.spectrum().entries()) {
    coeffs.push_back({{"k", k}, {"re", c.real()}, {"im", c.imag()}});
  }
  json doc;
  doc["alpha"] = map.alpha();
  doc["coefficients"] = std::move(coeffs);
  return doc.dump();
}

BoundaryData parse_boundary(std::string_view json_text) {
  const json doc = parse_json(json_text, "boundary data");
  require_fields(doc, {"samples"}, {"samples"}, "boundary data");
  const json& list = doc.at("samples");
  if (!list.is_array()) throw DomainError("boundary data: \"samples\" must be an array");
  std::vector<Complex> samples;
  samples.reserve(list.size());
  for (const json& item : list) {
    require_fields(item, {"re", "im"}, {"re", "im"}, "boundary sample");
    samples.emplace_back(number_field(item, "re", "boundary sample"), number_field(item, "im", "boundary sample"));
  }
  return BoundaryData(std::move(samples));
}

std::string report_to_json(const verify::VerificationReport& r) {
  json doc;
  doc["v"] = 1;
  doc["map_digest"] = r.map_digest;
  doc["rho0"] = r.rho0;
  doc["r0"] = r.r0;
  doc["n_samples"] = r.n_samples;
  doc["min_pair_separation"] = r.min_pair_separation;
  doc["collisions"] = r.collisions;
  doc["coverage_misses"] = r.coverage_misses;
  doc["hypothesis_ok"] = r.hypothesis_ok;
  doc["seed"] = r.seed;
  return doc.dump();
}

verify::VerificationReport parse_report(std::string_view json_text) {
  const json doc = parse_json(json_text, "report");
  const std::set<std::string> fields = {"v",          "map_digest",      "rho0",          "r0",   "n_samples",
                                        "collisions", "coverage_misses", "hypothesis_ok", "seed", "min_pair_separation"};
  require_fields(doc, fields, fields, "report");
  if (doc.at("v") != 1) throw DomainError("report: unsupported schema version");
  verify::VerificationReport r{};
  r.map_digest = doc.at("map_digest").get<std::string>();
  r.rho0 = doc.at("rho0").get<double>();
  r.r0 = doc.at("r0").get<double>();
  r.n_samples = doc.at("n_samples").get<int>();
  r.min_pair_separation = doc.at("min_pair_separation").get<double>();
  r.collisions = doc.at("collisions").get<std::int64_t>();
  r.coverage_misses = doc.at("coverage_misses").get<int>();
  r.hypothesis_ok = doc.at("hypothesis_ok").get<bool>();
  r.seed = doc.at("seed").get<std::uint64_t>();
  return r;
}

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::string format_complex(Complex z) {
  std::string out = format_double(z.real());
  const double im = z.imag();
  out += std::signbit(im) ? "-" : "+";
  out += format_double(std::abs(im));
  out += "i";
  return out;
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out(kSweepHeader);
  out += '\n';
  const auto opt = [](const std::optional<double>& v) { return v ? format_12g(*v) : std::string{}; };
  for (const auto& row : rows) {
    std::string error = row.error;
    for (char& ch : error) {
      if (ch == ',' || ch == '\n' || ch == '\r') ch = ';';
    }
    out += format_12g(row.alpha) + ',' + opt(row.a) + ',' + opt(row.rho0) + ',' + opt(row.r0_lower) + ',' + error;
    out += '\n';
  }
  return out;
}

std::vector<SweepRow> parse_sweep_csv(std::string_view csv) {
  std::vector<std::string> lines = split(csv, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty() || lines.front() != kSweepHeader) throw DomainError("sweep CSV: missing or wrong header");
  std::vector<SweepRow> rows;
  const auto opt = [](const std::string& s) -> std::optional<double> {
    if (s.empty()) return std::nullopt;
    return parse_double(s);
  };
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cells = split(lines[i], ',');
    if (cells.size() != 5) throw DomainError("sweep CSV: row " + std::to_string(i) + " does not have 5 columns");
    rows.push_back({parse_double(cells[0]), opt(cells[1]), opt(cells[2]), opt(cells[3]), cells[4]});
  }
  return rows;
}

}  // namespace alphaland::io
