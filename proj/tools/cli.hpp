#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace classprod::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kResource = 3,
  kIo = 4,
  kImpossible = 5,
  kInternal = 6,
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace classprod::cli
