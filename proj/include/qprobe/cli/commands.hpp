#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qprobe::cli {

/// Exit codes: 0 success, 1 domain verdict (unfaithful probe, annihilated
/// state, failed reproduction row), 2 input or usage error.
enum ExitCode : int { kSuccess = 0, kVerdict = 1, kUsage = 2 };

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` (or the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qprobe::cli
