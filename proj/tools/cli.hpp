#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sublist::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kSizeLimit = 3,
};

/// Largest list lengths accepted by `bench` and `solve`.
inline constexpr std::size_t kTopDownLimit = 9;
inline constexpr std::size_t kBottomUpLimit = 20;

/// Runs one command line (args excludes the program name). Machine-readable
/// output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sublist::cli
