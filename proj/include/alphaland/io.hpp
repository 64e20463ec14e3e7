#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alphaland/alphamap.hpp"
#include "alphaland/verify.hpp"

namespace alphaland::io {

/// Parses {"alpha": number, "coefficients": [{"k": int, "re": number, "im": number}, ...]}.
///
/// Unknown fields, repeated indices, and non-integral k are rejected with DomainError.
AlphaHarmonicMap parse_spectrum(std::string_view json_text);
std::string spectrum_to_json(const AlphaHarmonicMap& map);

/// Parses {"samples": [{"re": number, "im": number}, ...]}.
BoundaryData parse_boundary(std::string_view json_text);

/// Report object with schema version "v": 1.
std::string report_to_json(const verify::VerificationReport& report);
verify::VerificationReport parse_report(std::string_view json_text);

/// Lowercase hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

std::string read_file(const std::string& path);

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);
/// "a+bi" / "a-bi" with shortest round-trip components.
std::string format_complex(Complex z);

struct SweepRow {
  double alpha;
  std::optional<double> a;
  std::optional<double> rho0;
  std::optional<double> r0_lower;
  std::string error;  // empty on success
};

inline constexpr std::string_view kSweepHeader = "alpha,a,rho0,R0_lower,error";

/// CSV with header and one row per grid point, numbers at 12 significant digits.
std::string format_sweep_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_sweep_csv(std::string_view csv);

}  // namespace alphaland::io
