#ifndef TELSUM_CLI_HPP
#define TELSUM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace telsum {

/// Runs the command-line front end on the given argument list (without the
/// program name). Output goes to `out`, diagnostics to `err`.
/// Exit codes: 0 success/decided, 1 inconclusive, 2 input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace telsum

#endif
