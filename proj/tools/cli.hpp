#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace epistle::cli {

/// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_stall = 3;
inline constexpr int exit_contradiction = 4;
inline constexpr int exit_mismatch = 5;

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace epistle::cli
