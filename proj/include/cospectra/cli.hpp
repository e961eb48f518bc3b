#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cospectra {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitInput = 2,
    kExitPrecision = 3,
};

/// Runs the `cospectra` command line. `args` excludes the program name.
/// Documents go to `out`, diagnostics and usage text to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace cospectra
