#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grpoly::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs the grpoly command line. `args` excludes the program name.
/// Results go to `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grpoly::cli
