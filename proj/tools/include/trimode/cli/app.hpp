#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trimode::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitParse = 2,
  kExitUnstable = 3,
  kExitOracle = 4,
  kExitVerify = 5,
};

/// Runs one command line (without the program name) and returns the exit code.
/// Results go to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trimode::cli
