#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace alphaland::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitAccuracy = 3;

/// Runs one command. args excludes the program name. JSON or CSV goes to out,
/// diagnostics to err; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alphaland::cli
