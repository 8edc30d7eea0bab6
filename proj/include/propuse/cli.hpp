#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace propuse {

// Command-line entry point, testable in-process. `args` excludes the program
// name. Data goes to `out`, diagnostics to `err`. Exit codes: 0 success,
// 1 verification failure, 2 parse/validation/usage error, 3 budget exhausted.
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

}  // namespace propuse
