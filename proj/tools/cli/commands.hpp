#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pony::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 2,
  kExitSolver = 3,
  kExitResource = 4,
};

/// Runs the command line `args` (without the program name). Instance and
/// plan files named "-" are read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pony::cli
