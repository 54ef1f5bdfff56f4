#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ldstab::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kMismatch = 3,
  kResourceCap = 4,
};

/// Runs one command line (args excludes the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ldstab::cli
