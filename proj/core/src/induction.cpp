#include "sublist/induction.hpp"

#include <string>

namespace sublist {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw Overflow(what);
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Overflow(what);
  return out;
}

}  // namespace

std::string_view to_string(Algorithm alg) noexcept {
  return alg == Algorithm::TopDown ? "td" : "bu";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  if (name == "td") return Algorithm::TopDown;
  if (name == "bu") return Algorithm::BottomUp;
  return std::nullopt;
}

std::uint64_t td_call_count(std::uint64_t n) {
  if (n > 20) throw Overflow("td_call_count: n = " + std::to_string(n) + " exceeds 20");
  std::uint64_t calls = 0;
  for (std::uint64_t m = 1; m <= n; ++m) {
    calls = checked_add(1, checked_mul(m, calls, "td_call_count"), "td_call_count");
  }
  return calls;
}

std::uint64_t td_e_call_count(std::uint64_t n) {
  if (n > 20) throw Overflow("td_e_call_count: n = " + std::to_string(n) + " exceeds 20");
  std::uint64_t fact = 1;
  for (std::uint64_t m = 2; m <= n; ++m) fact = checked_mul(fact, m, "td_e_call_count");
  return fact;
}

std::uint64_t bu_call_count(std::uint64_t n) {
  if (n > 62) throw Overflow("bu_call_count: n = " + std::to_string(n) + " exceeds 62");
  return (std::uint64_t{1} << n) - 1;
}

}  // namespace sublist
