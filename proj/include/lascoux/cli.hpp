#ifndef LASCOUX_CLI_HPP
#define LASCOUX_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace lascoux {

/// Dispatches one CLI invocation. args excludes the program name. Results go
/// to out as JSON (CSV for delta-table on request), diagnostics to err.
/// Exit codes: 0 success, 1 input error, 2 consistency error, 3 resource
/// error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lascoux

#endif
