#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace paraline::cli {

enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,
    kUsage = 2,
    kBudget = 3,
};

/// Runs the command line `args` (without the program name). Output files go
/// where `--out` says, otherwise to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace paraline::cli
