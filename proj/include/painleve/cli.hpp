#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace painleve::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kNegativeVerdict = 1,
    kParseError = 2,
    kConstraintViolation = 3,
    kNumericEvent = 4,
};

/// Runs the command line `args` (args[0] is the program name). Machine
/// readable JSON goes to `out`, one document per line; diagnostics and human
/// readable verdicts go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace painleve::cli
