#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sublist/generators.hpp"
#include "sublist/tabulate.hpp"

using namespace sublist;
using oracle::b;
using oracle::s;
using oracle::z;

namespace {

using Str = std::string;
using Table = Tree<Str>;
using Nested = Tree<Table>;
using Lists = Tree<std::vector<Str>>;

// retabulate's contract stated directly: each (k+1)-sublist maps to the table
// of its own k-sublists.
template <class Seq>
Tree<Tree<Seq>> retabulate_by_definition(std::size_t k, const Seq& xs) {
  return map_tree([k](const Seq& ys) { return choose(k, ys); }, choose(k + 1, xs));
}

struct ChecksOff {
  ChecksOff() { set_shape_checks(false); }
  ~ChecksOff() { set_shape_checks(true); }
};

}  // namespace

TEST_CASE("choose reproduces the 2-sublist table of abcd") {
  CHECK(choose(2, Str("abcd")) == oracle::test_bt());
  CHECK(choose(0, Str("abc")) == z(""));
  CHECK(choose(2, Str("ab")) == s("ab"));
  CHECK(choose(0, Str("")) == z(""));
  CHECK(choose(1, Str("abc")) == b(b(s("c"), z("b")), z("a")));
  CHECK_THROWS_AS(choose(3, Str("ab")), InvalidLevel);
}

TEST_CASE("choose enumerates every k-subsequence exactly once") {
  for (std::size_t n = 0; n <= 10; ++n) {
    Str xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(static_cast<char>('a' + i));
    for (std::size_t k = 0; k <= n; ++k) {
      auto table = choose(k, xs);
      CHECK(validate_shape(table, n, k));
      auto got = flatten(table);
      CHECK(got.size() == binomial(n, k));
      std::sort(got.begin(), got.end());
      CHECK(std::adjacent_find(got.begin(), got.end()) == got.end());
      CHECK(got == oracle::k_subsets(xs, k));
    }
  }
}

TEST_CASE("choose works over vectors") {
  std::vector<int> xs{5, 6, 7};
  auto t = choose(2, xs);
  CHECK(flatten(t) == std::vector<std::vector<int>>{{6, 7}, {5, 7}, {5, 6}});
}

TEST_CASE("immediate_sublists") {
  CHECK(immediate_sublists(Str("abc")) == std::vector<Str>{"bc", "ac", "ab"});
  CHECK(immediate_sublists(Str("ab")) == std::vector<Str>{"b", "a"});
  CHECK(immediate_sublists(Str("a")) == std::vector<Str>{""});
  CHECK_THROWS_AS(immediate_sublists(Str("")), EmptyInput);
  for (std::size_t n = 1; n <= 8; ++n) {
    Str xs(n, ' ');
    for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<char>('a' + i);
    CHECK(immediate_sublists(xs) == oracle::drop_one(xs));
  }
}

TEST_CASE("blank") {
  using U = Tree<Unit>;
  CHECK(blank(1, 0) == U::tip_z({}));
  CHECK(blank(2, 1) == U::bin(U::tip_s({}), U::tip_z({})));
  CHECK(blank(4, 2) == map_tree([](const Str&) { return Unit{}; }, oracle::test_bt()));
  CHECK_THROWS_AS(blank(2, 3), InvalidLevel);
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      CHECK(validate_shape(blank(n, k), n, k));
      CHECK(size(blank(n, k)) == binomial(n, k));
    }
  }
}

TEST_CASE("blank tables are the only unit trees of their shape") {
  auto candidates = gen::all_unit_skeletons(3);
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const auto expected = blank(n, k);
      for (const auto& c : candidates) {
        if (validate_shape(c, n, k)) CHECK(c == expected);
      }
      for (const auto& m : gen::single_edit_mutants(expected)) {
        if (validate_shape(m, n, k)) CHECK(m == expected);
      }
    }
  }
}

TEST_CASE("cons_table") {
  CHECK(cons_table(Str("y"), z("z")) == b(s("y"), z("z")));
  auto t = b(s("p"), b(s("q"), z("r")));
  CHECK(flatten(cons_table(Str("y"), t)) == std::vector<Str>{"y", "p", "q", "r"});
  auto unit = map_tree([](const Str&) { return Unit{}; }, b(s("a"), z("b")));
  CHECK(validate_shape(cons_table(Unit{}, unit), 3, 2));
  CHECK(validate_shape(cons_table(Str("w"), t), 4, 3));
  CHECK_THROWS_AS(cons_table(Str("y"), s("x")), ShapeError);
  CHECK_THROWS_AS(cons_table(Str("y"), oracle::test_bt()), ShapeError);
  ChecksOff off;
  CHECK_NOTHROW(cons_table(Str("y"), s("x")));
}

TEST_CASE("retabulate: the level-0 clauses") {
  CHECK(retabulate(1, 0, z("y")) == Nested::tip_s(z("y")));
  CHECK(retabulate(2, 0, z("y")) == Nested::bin(Nested::tip_s(z("y")), Nested::tip_z(z("y"))));
  auto level1 = retabulate(5, 0, z("e"));
  CHECK(validate_shape(level1, 5, 1));
  CHECK(flatten(level1) == std::vector<Table>(5, z("e")));
}

TEST_CASE("retabulate groups abc's 1-sublists by 2-sublist") {
  auto got = retabulate(3, 1, choose(1, Str("abc")));
  auto expected = Nested::bin(Nested::tip_s(b(s("c"), z("b"))),
                              Nested::bin(Nested::tip_s(b(s("c"), z("a"))),
                                          Nested::tip_z(b(s("b"), z("a")))));
  CHECK(got == expected);
  CHECK(got == retabulate_by_definition(1, Str("abc")));
}

TEST_CASE("retabulate meets its definition for every level up to n = 9") {
  for (std::size_t n = 1; n <= 9; ++n) {
    Str xs;
    for (std::size_t i = 0; i < n; ++i) xs.push_back(static_cast<char>('a' + i));
    for (std::size_t k = 0; k < n; ++k) {
      auto got = retabulate(n, k, choose(k, xs));
      CHECK(got == retabulate_by_definition(k, xs));
      CHECK(validate_shape(got, n, k + 1));
      for (const auto& inner : flatten(got)) CHECK(validate_shape(inner, k + 1, k));
    }
  }
}

TEST_CASE("retabulate precondition errors") {
  CHECK_THROWS_AS(retabulate(2, 2, s("ab")), InvalidLevel);
  CHECK_THROWS_AS(retabulate(0, 0, z("")), InvalidLevel);
  CHECK_THROWS_AS(retabulate(4, 1, oracle::test_bt()), ShapeError);
  CHECK_THROWS_AS(retabulate(3, 1, s("x")), ShapeError);
}

TEST_CASE("retabulate is natural in the payload") {
  gen::Rng rng(5);
  auto payload = [](gen::Rng& r) { return gen::uniform_int(r, -500, 500); };
  auto f = [](std::int64_t x) { return std::to_string(x * 2); };
  for (int i = 0; i < 300; ++i) {
    auto shape = gen::random_proper_shape(rng, 8);
    auto t = gen::random_table(rng, shape, payload);
    auto lhs = retabulate(shape.n, shape.k, map_tree(f, t));
    auto rhs = map_tree([&](const Tree<std::int64_t>& inner) { return map_tree(f, inner); },
                        retabulate(shape.n, shape.k, t));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("un_tip is natural in the payload") {
  auto f = [](const Str& x) { return x.size() * 3; };
  for (const auto& t : {z("ab"), s("xyz"), z("")}) CHECK(f(un_tip(t)) == un_tip(map_tree(f, t)));
}

TEST_CASE("cd_classic") {
  CHECK(cd_classic(b(s("y"), z("z"))) == Lists::tip_s({"y", "z"}));
  auto expected = Lists::bin(Lists::tip_s({"c", "b"}),
                             Lists::bin(Lists::tip_s({"c", "a"}), Lists::tip_z({"b", "a"})));
  CHECK(cd_classic(choose(1, Str("abc"))) == expected);
  CHECK_THROWS_AS(cd_classic(z("x")), ShapeError);
  CHECK_THROWS_AS(cd_classic(s("x")), ShapeError);
  CHECK_THROWS_AS(cd_classic(b(z("x"), s("y"))), ShapeError);
}

TEST_CASE("cd_classic agrees with flattened retabulate on random tables") {
  gen::Rng rng(17);
  auto payload = [](gen::Rng& r) { return gen::uniform_int(r, 0, 1000); };
  for (int i = 0; i < 300; ++i) {
    std::size_t n = gen::uniform_size(rng, 2, 8);
    std::size_t k = gen::uniform_size(rng, 1, n - 1);
    auto t = gen::random_table(rng, Shape{n, k}, payload);
    auto via_retabulate = map_tree([](const Tree<std::int64_t>& inner) { return flatten(inner); },
                                   retabulate(n, k, t));
    CHECK(cd_classic(t) == via_retabulate);
  }
}

TEST_CASE("infer_shape and is_immediate_table") {
  CHECK(infer_shape(oracle::test_bt()) == Shape{4, 2});
  CHECK_FALSE(infer_shape(z("x")).has_value());
  CHECK_FALSE(infer_shape(b(z("x"), s("y"))).has_value());
  for (std::size_t n = 2; n <= 9; ++n) {
    for (std::size_t k = 1; k < n; ++k) CHECK(infer_shape(blank(n, k)) == Shape{n, k});
  }
  CHECK(is_immediate_table(z("x")));
  CHECK(is_immediate_table(b(s("a"), b(s("b"), z("c")))));
  CHECK_FALSE(is_immediate_table(s("x")));
  CHECK_FALSE(is_immediate_table(oracle::test_bt()));
}

TEST_CASE("check_spec_equation") {
  CHECK(check_spec_equation(1, Str("abc")));
  CHECK(check_spec_equation(2, Str("abcd")));
  CHECK(check_spec_equation(1, Str("ab")));
  CHECK(check_spec_equation(0, Str("abc")));
  CHECK_THROWS_AS(check_spec_equation(3, Str("abc")), InvalidLevel);
  for (std::size_t n = 1; n <= 9; ++n) {
    std::vector<int> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<int>(i * i);
    for (std::size_t k = 0; k < n; ++k) CHECK(check_spec_equation(k, xs));
  }
}

TEST_CASE("check_rotation") {
  CHECK(check_rotation(1, 0));
  CHECK(check_rotation(4, 2));
  for (std::size_t k = 0; k < 10; ++k) CHECK(check_rotation(10, k));
  CHECK_THROWS_AS(check_rotation(3, 3), InvalidLevel);
}
