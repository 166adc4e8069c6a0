#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace oudesign::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,        // bad flags, invalid parameters or designs
  kExitConvergence = 3,  // optimizer or quadrature did not converge
  kExitFormat = 4,       // unreadable or unusable input data
};

// Runs one command. args excludes the program name. Tabular/report output goes
// to `out` (or --out), diagnostics and the stdout-mode manifest to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oudesign::cli
