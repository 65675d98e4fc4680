#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sx {

enum ExitCode { kExitOk = 0, kExitFail = 1, kExitUsage = 2, kExitNumeric = 3 };

// Runs one command line; `args` excludes the program name. Reports go to `out`,
// diagnostics and progress lines to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sx
