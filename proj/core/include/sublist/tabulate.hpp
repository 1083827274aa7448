#pragma once

// Sublist tables and their rearrangement.
//
// choose(k, xs) tabulates the k-sublists of xs in a B |xs| k tree. Every
// table in this library is read against that enumeration: position i of a
// level-k table holds the entry for the i-th element of flatten(choose(k, xs)).
// Sublists keep the order of xs; tables are keyed by position, so duplicate
// elements in xs give repeated keys rather than merged ones.
//
// retabulate turns a level-k table into a level-(k+1) table whose entries are
// level-k tables over each (k+1)-sublist, i.e. the entries for that sublist's
// immediate sublists. cd_classic is the older list-returning form of the same
// rearrangement, kept for cross-checking.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sublist/error.hpp"
#include "sublist/tree.hpp"

namespace sublist {

/// Runtime shape validation on public entry points. On by default; turning it
/// off skips the O(size) validate_shape pass but keeps the level checks.
bool shape_checks_enabled() noexcept;
void set_shape_checks(bool enabled) noexcept;

/// The (n, k) shape of a Bin tree, read off its spines and then validated.
/// Tips are valid at infinitely many shapes and yield nullopt, as do trees
/// that are not binomial at all.
template <class P>
std::optional<Shape> infer_shape(const Tree<P>& t) {
  if (!t.is_bin()) return std::nullopt;
  std::size_t down_left = 0;
  for (Tree<P> cur = t; cur.is_bin(); cur = cur.left()) ++down_left;
  std::size_t down_right = 0;
  for (Tree<P> cur = t; cur.is_bin(); cur = cur.right()) ++down_right;
  Shape shape{down_left + down_right, down_right};
  if (!validate_shape(t, shape)) return std::nullopt;
  return shape;
}

/// True iff `t` validates at (k+1, k) for some k.
template <class P>
bool is_immediate_table(const Tree<P>& t) {
  Tree<P> cur = t;
  while (cur.is_bin()) {
    if (cur.left().variant() != Variant::TipS) return false;
    cur = cur.right();
  }
  return cur.variant() == Variant::TipZ;
}

namespace detail {

template <class Seq, class It>
Tree<Seq> choose_from(const Seq& prefix, std::size_t k, It first, It last) {
  auto remaining = static_cast<std::size_t>(last - first);
  if (k == 0) return Tree<Seq>::tip_z(prefix);
  if (k == remaining) {
    Seq whole = prefix;
    whole.insert(whole.end(), first, last);
    return Tree<Seq>::tip_s(std::move(whole));
  }
  // Threading the chosen head through `prefix` gives the same table as
  // mapping (x:) over choose(k-1, rest), without re-copying every entry.
  Seq with_head = prefix;
  with_head.push_back(*first);
  auto omit = choose_from(prefix, k, first + 1, last);
  auto keep = choose_from(with_head, k - 1, first + 1, last);
  return Tree<Seq>::bin(std::move(omit), std::move(keep));
}

template <class P>
Tree<P> cons_unchecked(P y, Tree<P> t) {
  return Tree<P>::bin(Tree<P>::tip_s(std::move(y)), std::move(t));
}

template <class P>
Tree<Tree<P>> retabulate_unchecked(std::size_t n, std::size_t k, const Tree<P>& t) {
  using Nested = Tree<Tree<P>>;
  if (t.variant() == Variant::TipZ) {
    // Level 0 to level 1: one copy of the entry per element of the list.
    if (n == 1) return Nested::tip_s(t);
    return Nested::bin(retabulate_unchecked(n - 1, 0, t), Nested::tip_z(t));
  }
  if (t.variant() == Variant::TipS) throw ShapeError("retabulate: TipS input at k < n");

  const Tree<P>& left = t.left();
  const Tree<P>& right = t.right();
  if (left.variant() == Variant::TipS) {
    return Nested::tip_s(cons_unchecked(left.payload(), right));
  }
  if (!left.is_bin()) throw ShapeError("retabulate: TipZ as left child of Bin");
  if (right.variant() == Variant::TipZ) {
    auto rest = map_tree([&right](const P& w) { return cons_unchecked(w, right); }, left);
    return Nested::bin(retabulate_unchecked(n - 1, k, left), std::move(rest));
  }
  if (!right.is_bin()) throw ShapeError("retabulate: TipS as right child of Bin");
  auto with_head = retabulate_unchecked(n - 1, k - 1, right);
  auto rest = zip_with([](const P& y, const Tree<P>& u) { return cons_unchecked(y, u); },
                       left, with_head);
  return Nested::bin(retabulate_unchecked(n - 1, k, left), std::move(rest));
}

template <class P>
Tree<std::vector<P>> cd_unchecked(const Tree<P>& t) {
  using Lists = Tree<std::vector<P>>;
  const Tree<P>& left = t.left();
  const Tree<P>& right = t.right();
  if (left.is_tip()) {
    if (right.is_tip()) return Lists::tip_s({left.payload(), right.payload()});
    if (!right.is_bin()) throw ShapeError("cd_classic: malformed tree");
    Lists below = cd_unchecked(right);
    if (!below.is_tip()) throw ShapeError("cd_classic: expected a tip below a tip");
    std::vector<P> ys;
    ys.reserve(1 + below.payload().size());
    ys.push_back(left.payload());
    ys.insert(ys.end(), below.payload().begin(), below.payload().end());
    return Lists::tip_s(std::move(ys));
  }
  if (right.is_tip()) {
    const P& z = right.payload();
    auto rest = map_tree([&z](const P& w) { return std::vector<P>{w, z}; }, left);
    return Lists::bin(cd_unchecked(left), std::move(rest));
  }
  auto with_head = cd_unchecked(right);
  auto rest = zip_with(
      [](const P& y, const std::vector<P>& ys) {
        std::vector<P> out;
        out.reserve(1 + ys.size());
        out.push_back(y);
        out.insert(out.end(), ys.begin(), ys.end());
        return out;
      },
      left, with_head);
  return Lists::bin(cd_unchecked(left), std::move(rest));
}

}  // namespace detail

/// All k-sublists of `xs` as a B |xs| k table. The left subtree of a Bin holds
/// the sublists omitting the head of the list, the right those containing it.
/// `Seq` is any sequence container with push_back and range insert
/// (std::string, std::vector<E>, ...). Throws InvalidLevel when k > |xs|.
template <class Seq>
Tree<Seq> choose(std::size_t k, const Seq& xs) {
  if (k > xs.size()) {
    throw InvalidLevel("choose: k = " + std::to_string(k) + " exceeds list length " +
                       std::to_string(xs.size()));
  }
  return detail::choose_from(Seq{}, k, xs.begin(), xs.end());
}

/// Every sublist with exactly one element removed, in table order.
template <class Seq>
std::vector<Seq> immediate_sublists(const Seq& xs) {
  if (xs.empty()) throw EmptyInput("immediate_sublists: empty list");
  return flatten(choose(xs.size() - 1, xs));
}

/// The unique Unit-payload tree of shape (n, k).
inline Tree<Unit> blank(std::size_t n, std::size_t k) {
  if (k > n) {
    throw InvalidLevel("blank: k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  }
  if (k == 0) return Tree<Unit>::tip_z({});
  if (k == n) return Tree<Unit>::tip_s({});
  return Tree<Unit>::bin(blank(n - 1, k), blank(n - 1, k - 1));
}

inline Tree<Unit> blank(Shape shape) { return blank(shape.n, shape.k); }

/// Bin(TipS(y), t): prepends an entry to a (k+1, k) table, giving a
/// (k+2, k+1) table. The precondition is checked only while shape checks are
/// enabled.
template <class P>
Tree<P> cons_table(P y, Tree<P> t) {
  if (shape_checks_enabled() && !is_immediate_table(t)) {
    throw ShapeError("cons_table: table is not of shape (k+1, k)");
  }
  return detail::cons_unchecked(std::move(y), std::move(t));
}

/// Rearranges a level-k table over an n-list into a level-(k+1) table of
/// level-k tables. Entry ys of the result holds t's entries for the immediate
/// sublists of ys, ordered as in choose(k, ys).
///
/// Throws InvalidLevel unless k < n, and ShapeError if t is not (n, k)-shaped
/// (the latter only while shape checks are enabled).
template <class P>
Tree<Tree<P>> retabulate(std::size_t n, std::size_t k, const Tree<P>& t) {
  if (k >= n) {
    throw InvalidLevel("retabulate: requires k < n, got n = " + std::to_string(n) +
                       ", k = " + std::to_string(k));
  }
  if (shape_checks_enabled() && !validate_shape(t, n, k)) {
    throw ShapeError("retabulate: tree is not of shape (" + std::to_string(n) + ", " +
                     std::to_string(k) + ")");
  }
  return detail::retabulate_unchecked(n, k, t);
}

/// List-valued rearrangement for tables at level 1 <= k < n. Agrees with
/// map_tree(flatten, retabulate(n, k, t)). Both tip variants are treated
/// alike; result tips are TipS.
template <class P>
Tree<std::vector<P>> cd_classic(const Tree<P>& t) {
  if (!t.is_bin()) throw ShapeError("cd_classic: input must be a Bin tree (1 <= k < n)");
  if (shape_checks_enabled() && !infer_shape(t)) {
    throw ShapeError("cd_classic: input is not a binomial tree");
  }
  return detail::cd_unchecked(t);
}

/// Checks, at the level of sublist keys, that
///   cd_classic(choose(k, xs)) == map(flatten . choose(k), choose(k+1, xs))   (k >= 1)
///   retabulate(n, k, choose(k, xs)) == map(choose(k), choose(k+1, xs))
/// For k = 0 only the second equation is checked. Throws InvalidLevel unless
/// k < |xs|.
template <class Seq>
bool check_spec_equation(std::size_t k, const Seq& xs) {
  const std::size_t n = xs.size();
  if (k >= n) {
    throw InvalidLevel("check_spec_equation: requires k < |xs|");
  }
  const Tree<Seq> level = choose(k, xs);
  const Tree<Seq> next = choose(k + 1, xs);
  if (k >= 1) {
    auto lhs = cd_classic(level);
    auto rhs = map_tree([k](const Seq& ys) { return flatten(choose(k, ys)); }, next);
    if (!(lhs == rhs)) return false;
  }
  auto lhs = retabulate(n, k, level);
  auto rhs = map_tree([k](const Seq& ys) { return choose(k, ys); }, next);
  return lhs == rhs;
}

/// retabulate(n, k, blank(n, k)) == map(const blank(k+1, k), blank(n, k+1)).
bool check_rotation(std::size_t n, std::size_t k);

}  // namespace sublist
