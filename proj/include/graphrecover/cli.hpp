#pragma once

#include <iosfwd>

namespace graphrecover {

/// Exit codes of the command-line workbench.
enum ExitCode : int {
    exit_ok = 0,
    exit_error = 1,
    exit_bound_violated = 2,
    exit_precondition = 3,
    exit_parse = 4,
};

/// Entry point of the `graphrecover` tool. Reports go to `out`, warnings
/// and diagnostics to `err`.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace graphrecover
