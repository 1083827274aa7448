#include "sublist/tabulate.hpp"

#include <atomic>

namespace sublist {

namespace {
std::atomic<bool> g_shape_checks{true};
}  // namespace

bool shape_checks_enabled() noexcept { return g_shape_checks.load(std::memory_order_relaxed); }

void set_shape_checks(bool enabled) noexcept {
  g_shape_checks.store(enabled, std::memory_order_relaxed);
}

bool check_rotation(std::size_t n, std::size_t k) {
  if (k >= n) throw InvalidLevel("check_rotation: requires k < n");
  auto lhs = retabulate(n, k, blank(n, k));
  const auto inner = blank(k + 1, k);
  auto rhs = map_tree([&inner](Unit) { return inner; }, blank(n, k + 1));
  return lhs == rhs;
}

}  // namespace sublist
