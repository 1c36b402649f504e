#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fakedeg::cli {

/// Runs the command line with `args` (program name excluded).
/// Returns 0 on success, 1 on a verification or agreement failure, 2 on a
/// usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fakedeg::cli
