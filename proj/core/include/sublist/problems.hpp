#pragma once

// Built-in problems over the sublist lattice, each paired with a way of
// checking it that does not go through the lattice drivers.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sublist/induction.hpp"

namespace sublist {

template <class E, class S>
struct Problem {
  std::string name;
  std::string element_domain;
  Solver<E, S> solver;
  /// Reference answer computed without td or bu (except for the digest
  /// problem, whose only claim is td == bu).
  std::function<S(const std::vector<E>&)> oracle;
  /// Random input of the given length.
  std::function<std::vector<E>(std::size_t size, std::uint64_t seed)> generator;
  /// Largest input length the oracle accepts.
  std::size_t oracle_bound = 0;
};

/// Seed returned for the empty list by the digest problem.
inline constexpr std::uint64_t kDigestSeed = 0x5ab115f0d16e57ULL;

/// The digest combiner: FNV-1a over the codec text of ys, then each child
/// digest in order.
std::uint64_t digest_combine(const std::vector<std::int64_t>& ys,
                             std::span<const std::uint64_t> children);

/// Order-sensitive digest of the whole lattice. Any misplaced child changes
/// the answer.
Problem<std::int64_t, std::uint64_t> digest_problem();

/// e = 1, g = 1 + sum of children. Closed form s(0) = 1, s(m) = 1 + m s(m-1).
/// Throws Overflow once a value leaves 64 bits (m > 20).
Problem<std::string, std::uint64_t> subtree_count_problem();

/// s(m) = 1 + m s(m-1), s(0) = 1. Throws Overflow for m > 20.
std::uint64_t subtree_count_closed_form(std::uint64_t m);

enum class RemovalCost { Sum, Max };

/// Cheapest order of deleting the elements one at a time, where each
/// deletion costs the sum (or max) of the list before it:
///   s([]) = 0,  s(ys) = cost(ys) + min over immediate sublists zs of s(zs).
Problem<std::int64_t, std::int64_t> min_removal_cost_problem(RemovalCost cost);

/// Exhaustive minimum over all |xs|! removal orders. Throws SizeLimit for
/// |xs| > 8.
std::int64_t brute_force_removal_oracle(RemovalCost cost, const std::vector<std::int64_t>& xs);

inline constexpr std::size_t kRemovalOracleBound = 8;

/// Splits CLI input: text containing a comma is comma-separated tokens;
/// otherwise every character is one token. A trailing comma is dropped, so
/// "42," is the single token "42". Empty text is the empty list.
std::vector<std::string> split_input(std::string_view input);

/// Result of a name-addressed run, with the solution rendered as codec text.
struct ProblemRun {
  std::string solution;
  std::uint64_t solution_digest = 0;
  CallStats stats;
};

/// Type-erased problem for lookup by name.
struct ProblemEntry {
  std::string name;
  std::string description;
  /// Parses `input` (see split_input) and runs the chosen driver with
  /// instrumentation. Throws ParseError for unparseable elements.
  std::function<ProblemRun(std::string_view input, Algorithm alg)> run;
  /// Comma-separated random input of length n.
  std::function<std::string(std::size_t n, std::uint64_t seed)> generate;
};

/// digest, subtree-count, min-removal-sum, min-removal-max.
const std::vector<ProblemEntry>& problem_registry();

/// nullptr when no problem has that name.
const ProblemEntry* find_problem(std::string_view name);

}  // namespace sublist
