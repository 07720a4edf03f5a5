#pragma once

#include <string>
#include <vector>

namespace ipts {

/// Runs one CLI invocation; `args` are the arguments after the program
/// name. Results go to standard output, diagnostics to standard error.
/// Exit codes: 0 success, 1 usage error, 2 parse error, 3 mathematical
/// error (unbounded or infeasible).
int run(const std::vector<std::string>& args);

}  // namespace ipts
