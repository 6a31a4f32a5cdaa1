#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace overq {

/// Runs the command-line tool on `args` (program name excluded).
/// Exit codes: 0 success, 1 usage error, 2 cross-check mismatch,
/// 3 congruence violation, 4 conjecture counterexample.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace overq
