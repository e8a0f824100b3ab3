#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lmarkov::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
};

/// Runs the command line `args` (program name excluded). Report output goes
/// to `out` unless --out names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lmarkov::cli
