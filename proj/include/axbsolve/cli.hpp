#ifndef AXBSOLVE_CLI_HPP
#define AXBSOLVE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "axbsolve/parametric.hpp"

namespace axbsolve::cli {

/// Exit statuses shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kInconsistent = 2,
    kVerifyFailed = 3,
};

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit status. Subcommands: check, solve, kron-solve, oneinv, verify, bench.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "name=p/q,name2=3". Throws std::invalid_argument on bad syntax or
/// repeated names.
ParameterValues parse_param_values(const std::string& text);

}  // namespace axbsolve::cli

#endif  // AXBSOLVE_CLI_HPP
