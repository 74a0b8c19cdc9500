#pragma once

#include <ostream>

namespace locallip::cli {

enum ExitCode : int {
  kOk = 0,
  kViolation = 1,
  kUsage = 2,
  kIo = 3,
};

/// Entry point of the `locallip` tool, with the streams injectable for tests.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace locallip::cli
