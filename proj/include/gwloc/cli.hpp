#pragma once

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

namespace gwloc {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,              ///< bad flags, invalid input, missing inputs
    kExitDimensionMismatch = 2,
    kExitEngineFailure = 3,      ///< weight-independence failure or exhausted weight retries
};

/// Maps an error to its exit code: DimensionMismatch -> 2, WeightIndependenceFailure
/// and DegenerateWeights -> 3, anything else -> 1.
int exit_code_for(const std::exception& e);

/// Runs one command line (without the program name). Subcommands: genus0, table1,
/// bps, dims, wdvv, graphs.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace gwloc
