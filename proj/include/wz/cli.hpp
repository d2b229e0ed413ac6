#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wz::cli {

inline constexpr const char* kToolVersion = "wzcli 1.0.0";

enum ExitCode {
  kOk = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kNoSolution = 3,
  kNumericInsufficient = 4,
};

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wz::cli
