#pragma once

// Binomial-shaped binary trees.
//
// A Tree<P> is an immutable value built from three constructors:
//
//   TipZ(p)    a level-0 table (exactly one entry, keyed by the empty sublist)
//   TipS(p)    a level-n table over an n-list, n >= 1 (the whole list is the key)
//   Bin(l, r)  a level-k table over an n-list, 0 < k < n; `l` holds the
//              k-sublists that omit the head, `r` the ones that contain it
//
// Trees do not carry their (n, k) indices. Operations that need them take a
// Shape or explicit integers and check them with validate_shape().
//
// Nodes are shared through shared_ptr<const Node>; copying a Tree is O(1) and
// trees may be handed between threads freely.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "sublist/error.hpp"

namespace sublist {

/// The one-value payload used by blank tables.
struct Unit {
  friend constexpr bool operator==(Unit, Unit) noexcept { return true; }
};

enum class Variant : std::uint8_t { TipZ, TipS, Bin };

/// Level indices (n, k) naming the B n k shape.
struct Shape {
  std::size_t n = 0;
  std::size_t k = 0;

  friend constexpr bool operator==(const Shape&, const Shape&) = default;
};

template <class P>
class Tree;

namespace detail {
template <class P>
struct TreeNode;
}  // namespace detail

template <class P>
class Tree {
 public:
  using payload_type = P;

  static Tree tip_z(P payload) { return tip(Variant::TipZ, std::move(payload)); }
  static Tree tip_s(P payload) { return tip(Variant::TipS, std::move(payload)); }
  static Tree bin(Tree left, Tree right) {
    return Tree(std::make_shared<const Node>(Variant::Bin, std::nullopt, std::move(left),
                                             std::move(right)));
  }

  Variant variant() const noexcept { return node_->variant; }
  bool is_tip() const noexcept { return node_->variant != Variant::Bin; }
  bool is_bin() const noexcept { return node_->variant == Variant::Bin; }

  const P& payload() const {
    if (!is_tip()) throw NotATip("payload() on a Bin node");
    return *node_->payload;
  }
  const Tree& left() const {
    if (!is_bin()) throw ShapeError("left() on a tip");
    return node_->left;
  }
  const Tree& right() const {
    if (!is_bin()) throw ShapeError("right() on a tip");
    return node_->right;
  }

  /// True when both handles refer to the same node.
  bool same_node(const Tree& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const Tree& a, const Tree& b) {
    if (a.node_ == b.node_) return true;
    if (a.variant() != b.variant()) return false;
    if (a.is_tip()) return *a.node_->payload == *b.node_->payload;
    return a.node_->left == b.node_->left && a.node_->right == b.node_->right;
  }

 private:
  using Node = detail::TreeNode<P>;

  static Tree tip(Variant variant, P payload) {
    return Tree(std::make_shared<const Node>(variant, std::move(payload), Tree(), Tree()));
  }
  Tree() = default;
  explicit Tree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  friend struct detail::TreeNode<P>;

  std::shared_ptr<const Node> node_;
};

namespace detail {
template <class P>
struct TreeNode {
  TreeNode(Variant v, std::optional<P> p, Tree<P> l, Tree<P> r)
      : variant(v), payload(std::move(p)), left(std::move(l)), right(std::move(r)) {}

  Variant variant;
  std::optional<P> payload;
  Tree<P> left;
  Tree<P> right;
};
}  // namespace detail

template <class T>
struct is_tree : std::false_type {};
template <class P>
struct is_tree<Tree<P>> : std::true_type {};
template <class T>
inline constexpr bool is_tree_v = is_tree<T>::value;

/// Number of Tree layers wrapped around a non-tree payload.
template <class T>
struct nesting_depth : std::integral_constant<std::size_t, 0> {};
template <class P>
struct nesting_depth<Tree<P>>
    : std::integral_constant<std::size_t, 1 + nesting_depth<P>::value> {};
template <class T>
inline constexpr std::size_t nesting_depth_v = nesting_depth<T>::value;

/// Catamorphism: replaces tips with `on_tip(variant, payload)` and Bin nodes
/// with `on_bin(left_result, right_result)`.
template <class P, class OnTip, class OnBin>
auto fold_tree(const Tree<P>& t, OnTip&& on_tip, OnBin&& on_bin)
    -> std::decay_t<std::invoke_result_t<OnTip&, Variant, const P&>> {
  if (t.is_tip()) return std::invoke(on_tip, t.variant(), t.payload());
  auto l = fold_tree(t.left(), on_tip, on_bin);
  auto r = fold_tree(t.right(), on_tip, on_bin);
  return std::invoke(on_bin, std::move(l), std::move(r));
}

/// True iff `t` has exactly the B n k shape: k = 0 forces TipZ, n = k >= 1
/// forces TipS, 0 < k < n forces Bin with children at (n-1, k) and
/// (n-1, k-1). Nothing validates when k > n.
template <class P>
bool validate_shape(const Tree<P>& t, std::size_t n, std::size_t k) {
  if (k > n) return false;
  if (k == 0) return t.variant() == Variant::TipZ;
  if (k == n) return t.variant() == Variant::TipS;
  if (!t.is_bin()) return false;
  return validate_shape(t.left(), n - 1, k) && validate_shape(t.right(), n - 1, k - 1);
}

template <class P>
bool validate_shape(const Tree<P>& t, Shape shape) {
  return validate_shape(t, shape.n, shape.k);
}

/// Number of payloads.
template <class P>
std::size_t size(const Tree<P>& t) {
  if (t.is_tip()) return 1;
  return size(t.left()) + size(t.right());
}

template <class P, class F>
auto map_tree(F&& f, const Tree<P>& t)
    -> Tree<std::decay_t<std::invoke_result_t<F&, const P&>>> {
  using Q = std::decay_t<std::invoke_result_t<F&, const P&>>;
  switch (t.variant()) {
    case Variant::TipZ:
      return Tree<Q>::tip_z(std::invoke(f, t.payload()));
    case Variant::TipS:
      return Tree<Q>::tip_s(std::invoke(f, t.payload()));
    case Variant::Bin:
      break;
  }
  auto l = map_tree(f, t.left());
  auto r = map_tree(f, t.right());
  return Tree<Q>::bin(std::move(l), std::move(r));
}

/// Pairwise combination of two trees with identical skeletons (tip variants
/// included). Throws ShapeMismatch at the first differing node.
template <class P, class Q, class F>
auto zip_with(F&& f, const Tree<P>& t, const Tree<Q>& u)
    -> Tree<std::decay_t<std::invoke_result_t<F&, const P&, const Q&>>> {
  using R = std::decay_t<std::invoke_result_t<F&, const P&, const Q&>>;
  if (t.variant() != u.variant()) throw ShapeMismatch("zip_with: skeletons differ");
  switch (t.variant()) {
    case Variant::TipZ:
      return Tree<R>::tip_z(std::invoke(f, t.payload(), u.payload()));
    case Variant::TipS:
      return Tree<R>::tip_s(std::invoke(f, t.payload(), u.payload()));
    case Variant::Bin:
      break;
  }
  auto l = zip_with(f, t.left(), u.left());
  auto r = zip_with(f, t.right(), u.right());
  return Tree<R>::bin(std::move(l), std::move(r));
}

template <class P>
const P& un_tip(const Tree<P>& t) {
  if (!t.is_tip()) throw NotATip("un_tip: tree is a Bin node");
  return t.payload();
}

namespace detail {
template <class P>
void flatten_into(const Tree<P>& t, std::vector<P>& out) {
  if (t.is_tip()) {
    out.push_back(t.payload());
    return;
  }
  flatten_into(t.left(), out);
  flatten_into(t.right(), out);
}
}  // namespace detail

/// Payloads in left-to-right order.
template <class P>
std::vector<P> flatten(const Tree<P>& t) {
  std::vector<P> out;
  detail::flatten_into(t, out);
  return out;
}

/// Sizes of the subtrees met walking down the left spine, innermost first.
/// For the level tables over a 4-list these are the Pascal diagonals
/// [1,2,3,4], [1,3,6] and [1,4].
template <class P>
std::vector<std::size_t> left_spine_sizes(const Tree<P>& t) {
  std::vector<std::size_t> sizes;
  std::optional<Tree<P>> cur = t;
  while (true) {
    sizes.push_back(size(*cur));
    if (!cur->is_bin()) break;
    cur = cur->left();
  }
  return {sizes.rbegin(), sizes.rend()};
}

/// C(n, k); 0 when k > n. Throws Overflow if the value exceeds 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace sublist
