#ifndef EXPLORER_CLI_HPP_
#define EXPLORER_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace explorer {

// Full command-line front end, callable in-process so tests can capture the
// exact bytes the binary would produce. `args` excludes the program name.
//
// Subcommands: run, sweep, fit, compare, plot.
// Exit codes: 0 success, 1 usage error, 2 config/validation error, 3 I/O error.
// Results go to `out` (or files named by flags); diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace explorer

#endif  // EXPLORER_CLI_HPP_
