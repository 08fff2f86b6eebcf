#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ecat::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kBadArguments = 2,
  kScaleCapRefused = 3,
};

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ecat::cli
