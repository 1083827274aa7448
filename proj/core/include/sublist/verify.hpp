#pragma once

// Aggregated law checks behind the `verify` command.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sublist {

struct SuiteResult {
  std::string name;
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  /// Description of the first failing case, empty when none failed.
  std::string first_failure;

  bool ok() const noexcept { return failed == 0; }
};

struct VerifyReport {
  std::size_t max_n = 0;
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool ok() const noexcept;
};

inline constexpr std::size_t kVerifyMaxN = 10;

/// Runs every suite with list lengths bounded by `max_n` (further capped per
/// suite where the work grows factorially). Throws SizeLimit if
/// max_n > kVerifyMaxN. Suites are independent and deterministic given seed.
VerifyReport run_verification(std::size_t max_n, std::uint64_t seed);

}  // namespace sublist
