#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace copart::cli {

enum ExitCode : int { exit_pass = 0, exit_fail = 1, exit_usage = 2 };

/// Default row limits of the two coefficient paths; --limit overrides.
inline constexpr int exact_limit = 2000;
inline constexpr int parity_limit = 32000;
inline constexpr long long enumerate_limit = 100000;

/// Environment variable naming the default cache directory of `tables`.
inline constexpr const char* cache_env = "COPART_CACHE_DIR";

/// Runs the command line `args` (without the program name). Data goes to `out` unless
/// --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace copart::cli
