#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vgr::cli {

enum ExitCode : int { pass = 0, conflict = 1, input_error = 2, construction_failure = 3 };

/// Runs one CLI invocation. args[0] is the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vgr::cli
