#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace picksim {

enum ExitCode : int { exit_ok = 0, exit_runtime = 1, exit_parse = 2, exit_validation = 3 };

/// `args` excludes the program name. Diagnostics go to `err` as single
/// lines starting with "error:".
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace picksim
