#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graceful {

// process exit codes shared by every subcommand
inline constexpr int kExitOk = 0;            // success / graceful / feasible
inline constexpr int kExitNegative = 1;      // not graceful / proven infeasible / disagreement
inline constexpr int kExitUsage = 2;         // bad flags, bad schema, out-of-range n
inline constexpr int kExitInconclusive = 3;  // budget ran out before a verdict

/// Full CLI driver; `args` excludes the program name. Streams replace stdout
/// and stderr so tests can capture byte-exact output.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace graceful
