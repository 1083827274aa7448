#pragma once

// Immediate-sublist induction.
//
// A Solver (e, g) defines a value s(xs) for every list:
//   s([])  = e()
//   s(ys)  = g(ys, children)   where children is a (|ys|, |ys|-1) table and
//                              entry i of flatten(children) is s applied to
//                              entry i of flatten(choose(|ys|-1, ys)).
//
// td evaluates this directly and re-solves shared sublists many times. bu
// builds the lattice level by level with retabulate and calls g once per
// nonempty sublist position. Both must agree for every pure solver.

#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sublist/error.hpp"
#include "sublist/tabulate.hpp"
#include "sublist/tree.hpp"

namespace sublist {

template <class E, class S>
struct Solver {
  using element_type = E;
  using solution_type = S;

  std::function<S()> e;
  std::function<S(const std::vector<E>& ys, const Tree<S>& children)> g;
};

/// Solver with a singleton base instead of an empty-list base; only defined
/// on nonempty lists.
template <class E, class S>
struct SingletonSolver {
  std::function<S(const E& x)> f;
  std::function<S(const std::vector<E>& ys, const Tree<S>& children)> g;
};

enum class Algorithm { TopDown, BottomUp };

std::string_view to_string(Algorithm alg) noexcept;
/// "td" or "bu"; nullopt for anything else.
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

struct CallStats {
  std::uint64_t g_calls = 0;
  std::uint64_t e_calls = 0;
  /// Deepest table nesting the driver held at once: 1 for flat tables, 2 for
  /// tables of tables. 0 when no table was built.
  std::size_t peak_nesting = 0;
  std::uint64_t wall_ns = 0;
};

namespace detail {

/// Records the deepest table nesting seen. Safe under concurrent updates.
class NestingProbe {
 public:
  void note(std::size_t depth) noexcept {
    std::size_t seen = peak_.load(std::memory_order_relaxed);
    while (depth > seen && !peak_.compare_exchange_weak(seen, depth, std::memory_order_relaxed)) {
    }
  }
  std::size_t peak() const noexcept { return peak_.load(std::memory_order_relaxed); }

 private:
  std::atomic<std::size_t> peak_{0};
};

template <class Table, class S>
inline constexpr std::size_t table_layers_v = nesting_depth_v<Table> - nesting_depth_v<S>;

template <class E, class S>
S top_down(const Solver<E, S>& solver, const std::vector<E>& xs, NestingProbe* probe) {
  if (xs.empty()) return solver.e();
  auto children = map_tree([&](const std::vector<E>& ys) { return top_down(solver, ys, probe); },
                           choose(xs.size() - 1, xs));
  if (probe) probe->note(table_layers_v<decltype(children), S>);
  return solver.g(xs, children);
}

template <class E, class S>
S bottom_up_from(const Solver<E, S>& solver, const std::vector<E>& xs, Tree<S> level,
                 std::size_t start, NestingProbe* probe) {
  const std::size_t n = xs.size();
  if (probe) probe->note(table_layers_v<Tree<S>, S>);
  for (std::size_t k = start; k < n; ++k) {
    auto grouped = retabulate(n, k, level);
    if (probe) probe->note(table_layers_v<decltype(grouped), S>);
    level = zip_with([&](const std::vector<E>& ys, const Tree<S>& children) {
      return solver.g(ys, children);
    }, choose(k + 1, xs), grouped);
  }
  return un_tip(level);
}

template <class E, class S>
S bottom_up(const Solver<E, S>& solver, const std::vector<E>& xs, NestingProbe* probe) {
  return bottom_up_from(solver, xs, Tree<S>::tip_z(solver.e()), 0, probe);
}

}  // namespace detail

/// Direct recursion over immediate sublists.
template <class E, class S>
S td(const Solver<E, S>& solver, const std::vector<E>& xs) {
  return detail::top_down(solver, xs, nullptr);
}

/// Level-by-level tabulation: start from TipZ(e()) and retabulate n times.
template <class E, class S>
S bu(const Solver<E, S>& solver, const std::vector<E>& xs) {
  return detail::bottom_up(solver, xs, nullptr);
}

template <class E, class S>
S solve(Algorithm alg, const Solver<E, S>& solver, const std::vector<E>& xs) {
  return alg == Algorithm::TopDown ? td(solver, xs) : bu(solver, xs);
}

template <class E, class S>
S td(const SingletonSolver<E, S>& solver, const std::vector<E>& xs) {
  if (xs.empty()) throw EmptyInput("singleton-base td: empty list");
  if (xs.size() == 1) return solver.f(xs.front());
  auto children = map_tree([&](const std::vector<E>& ys) { return td(solver, ys); },
                           choose(xs.size() - 1, xs));
  return solver.g(xs, children);
}

/// Seeds level 1 with f and runs the same loop from k = 1.
template <class E, class S>
S bu(const SingletonSolver<E, S>& solver, const std::vector<E>& xs) {
  if (xs.empty()) throw EmptyInput("singleton-base bu: empty list");
  Solver<E, S> step{nullptr, solver.g};
  auto level = map_tree([&](const std::vector<E>& ys) { return solver.f(ys.front()); },
                        choose(1, xs));
  return detail::bottom_up_from(step, xs, std::move(level), 1, nullptr);
}

/// Key of a sublist by the positions it keeps from the input.
using PositionKey = std::vector<std::size_t>;

template <class S>
struct InstrumentedRun {
  S result;
  CallStats stats;
  /// How many times g ran on each sublist, keyed by positions. Filled only
  /// when requested.
  std::optional<std::map<PositionKey, std::uint64_t>> visits;
};

struct InstrumentOptions {
  bool record_visits = false;
};

/// Runs `alg` with counting wrappers around e and g. The driver works on
/// input positions internally, so visit keys stay distinct even when xs has
/// repeated elements; g still sees the elements themselves.
template <class E, class S>
InstrumentedRun<S> run_instrumented(Algorithm alg, const Solver<E, S>& solver,
                                    const std::vector<E>& xs, InstrumentOptions options = {}) {
  std::atomic<std::uint64_t> g_calls{0};
  std::atomic<std::uint64_t> e_calls{0};
  std::mutex visits_mutex;
  std::map<PositionKey, std::uint64_t> visits;

  Solver<std::size_t, S> counted{
      [&]() {
        e_calls.fetch_add(1, std::memory_order_relaxed);
        return solver.e();
      },
      [&](const PositionKey& positions, const Tree<S>& children) {
        g_calls.fetch_add(1, std::memory_order_relaxed);
        if (options.record_visits) {
          std::lock_guard lock(visits_mutex);
          ++visits[positions];
        }
        std::vector<E> ys;
        ys.reserve(positions.size());
        for (std::size_t p : positions) ys.push_back(xs[p]);
        return solver.g(ys, children);
      }};

  PositionKey all(xs.size());
  std::iota(all.begin(), all.end(), std::size_t{0});

  detail::NestingProbe probe;
  auto start = std::chrono::steady_clock::now();
  S result = alg == Algorithm::TopDown ? detail::top_down(counted, all, &probe)
                                       : detail::bottom_up(counted, all, &probe);
  auto elapsed = std::chrono::steady_clock::now() - start;

  InstrumentedRun<S> run{std::move(result), {}, std::nullopt};
  run.stats.g_calls = g_calls.load();
  run.stats.e_calls = e_calls.load();
  run.stats.peak_nesting = probe.peak();
  run.stats.wall_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(elapsed).count());
  if (options.record_visits) run.visits = std::move(visits);
  return run;
}

/// g invocations of td on a list of n distinct elements:
/// T(0) = 0, T(n) = 1 + n * T(n-1). Throws Overflow for n > 20.
std::uint64_t td_call_count(std::uint64_t n);

/// e invocations of td: n! for n >= 1, 1 for n = 0. Throws Overflow for n > 20.
std::uint64_t td_e_call_count(std::uint64_t n);

/// g invocations of bu: 2^n - 1. Throws Overflow for n > 62.
std::uint64_t bu_call_count(std::uint64_t n);

}  // namespace sublist
