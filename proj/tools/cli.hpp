#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mt::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitBudget = 3;

/// Runs one `mtdist` subcommand. `args` excludes the program name. The
/// primary artifact goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mt::cli
