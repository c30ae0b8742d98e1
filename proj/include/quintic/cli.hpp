#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quintic::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Writes the output
/// envelope to `out` and diagnostics to `err`; returns the process exit code.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quintic::cli
