#pragma once

// Random inputs for property checks.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sublist/tabulate.hpp"
#include "sublist/tree.hpp"

namespace sublist::gen {

using Rng = std::mt19937_64;

inline std::size_t uniform_size(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// Random (n, k) with n <= max_n and k <= n.
inline Shape random_shape(Rng& rng, std::size_t max_n) {
  std::size_t n = uniform_size(rng, 0, max_n);
  return {n, uniform_size(rng, 0, n)};
}

/// Random (n, k) with k < n <= max_n; requires max_n >= 1.
inline Shape random_proper_shape(Rng& rng, std::size_t max_n) {
  std::size_t n = uniform_size(rng, 1, max_n);
  return {n, uniform_size(rng, 0, n - 1)};
}

/// A shape-valid tree whose payloads come from `payload(rng)`.
template <class PayloadGen>
auto random_table(Rng& rng, Shape shape, PayloadGen&& payload) {
  return map_tree([&](Unit) { return payload(rng); }, blank(shape));
}

/// Printable text that includes the codec's escape characters.
inline std::string random_text(Rng& rng, std::size_t max_len) {
  static constexpr char kAlphabet[] = "ab\"\\,()[]*ZSB 019-";
  std::string s(uniform_size(rng, 0, max_len), ' ');
  for (char& c : s) c = kAlphabet[uniform_size(rng, 0, sizeof kAlphabet - 2)];
  return s;
}

/// Any binary skeleton (not necessarily binomial) of depth <= max_depth.
template <class PayloadGen>
auto random_skeleton(Rng& rng, std::size_t max_depth, PayloadGen&& payload)
    -> Tree<decltype(payload(rng))> {
  using P = decltype(payload(rng));
  std::size_t pick = uniform_size(rng, 0, max_depth == 0 ? 1 : 3);
  if (pick == 0) return Tree<P>::tip_z(payload(rng));
  if (pick == 1) return Tree<P>::tip_s(payload(rng));
  auto l = random_skeleton(rng, max_depth - 1, payload);
  auto r = random_skeleton(rng, max_depth - 1, payload);
  return Tree<P>::bin(std::move(l), std::move(r));
}

/// Distinct elements 0..n-1 in random order.
inline std::vector<std::int64_t> distinct_ints(Rng& rng, std::size_t n) {
  std::vector<std::int64_t> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<std::int64_t>(i);
  std::shuffle(xs.begin(), xs.end(), rng);
  return xs;
}

/// Every Unit skeleton of depth <= max_depth (2, 6, 38, 1446, ... trees).
inline std::vector<Tree<Unit>> all_unit_skeletons(std::size_t max_depth) {
  std::vector<Tree<Unit>> trees{Tree<Unit>::tip_z({}), Tree<Unit>::tip_s({})};
  for (std::size_t d = 0; d < max_depth; ++d) {
    std::vector<Tree<Unit>> next{Tree<Unit>::tip_z({}), Tree<Unit>::tip_s({})};
    for (const auto& l : trees) {
      for (const auto& r : trees) next.push_back(Tree<Unit>::bin(l, r));
    }
    trees = std::move(next);
  }
  return trees;
}

/// Every tree obtained from `t` by one local edit at one node: flipping a tip
/// variant, growing a tip into Bin(TipZ, TipZ), collapsing a Bin into either
/// tip, or swapping a Bin's children.
inline std::vector<Tree<Unit>> single_edit_mutants(const Tree<Unit>& t) {
  using T = Tree<Unit>;
  std::vector<T> out;
  switch (t.variant()) {
    case Variant::TipZ:
      out.push_back(T::tip_s({}));
      out.push_back(T::bin(T::tip_z({}), T::tip_z({})));
      return out;
    case Variant::TipS:
      out.push_back(T::tip_z({}));
      out.push_back(T::bin(T::tip_z({}), T::tip_z({})));
      return out;
    case Variant::Bin:
      break;
  }
  out.push_back(T::tip_z({}));
  out.push_back(T::tip_s({}));
  out.push_back(T::bin(t.right(), t.left()));
  for (auto& m : single_edit_mutants(t.left())) out.push_back(T::bin(m, t.right()));
  for (auto& m : single_edit_mutants(t.right())) out.push_back(T::bin(t.left(), m));
  return out;
}

}  // namespace sublist::gen
