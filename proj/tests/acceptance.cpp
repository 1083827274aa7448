// Acceptance suite: one line per criterion, exit status 0 only if all pass.
// Every check is exact; each criterion also has a wall-clock limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sublist/codec.hpp"
#include "sublist/generators.hpp"
#include "sublist/induction.hpp"
#include "sublist/problems.hpp"
#include "sublist/tabulate.hpp"

using namespace sublist;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (ok || !pass) {
      pass = pass && ok;
      return;
    }
    pass = false;
    detail = what;
  }
};

struct Criterion {
  const char* id;
  const char* name;
  double limit_ms;
  std::function<Outcome()> body;
};

// Deepest nesting reported by any instrumented bu run in this process.
std::size_t g_bu_runs = 0;
std::size_t g_bu_peak = 0;

template <class E, class S>
InstrumentedRun<S> bu_tracked(const Solver<E, S>& solver, const std::vector<E>& xs,
                              InstrumentOptions options = {}) {
  auto run = run_instrumented(Algorithm::BottomUp, solver, xs, options);
  ++g_bu_runs;
  g_bu_peak = std::max(g_bu_peak, run.stats.peak_nesting);
  return run;
}

std::string letters(std::size_t n) {
  std::string xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(static_cast<char>('a' + i));
  return xs;
}

std::vector<std::int64_t> distinct(std::size_t n) {
  std::vector<std::int64_t> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<std::int64_t>(100 + i);
  return xs;
}

std::string at(std::size_t n, std::size_t k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

Outcome golden_structure() {
  Outcome o;
  auto table = choose(2, std::string("abcd"));
  o.require(table == oracle::test_bt(), "choose(2, \"abcd\") differs from the reference tree");
  o.require(flatten(table) == std::vector<std::string>{"cd", "bd", "bc", "ad", "ac", "ab"},
            "payload order");
  return o;
}

Outcome shape_size_law() {
  Outcome o;
  for (std::size_t n = 0; n <= 12; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      auto t = blank(n, k);
      o.require(validate_shape(t, n, k), "blank fails validation at " + at(n, k));
      o.require(size(t) == binomial(n, k), "size != C(n,k) at " + at(n, k));
    }
  }
  const std::string xs = "abcd";
  o.require(left_spine_sizes(choose(1, xs)) == std::vector<std::size_t>{1, 2, 3, 4}, "diagonal k=1");
  o.require(left_spine_sizes(choose(2, xs)) == std::vector<std::size_t>{1, 3, 6}, "diagonal k=2");
  o.require(left_spine_sizes(choose(3, xs)) == std::vector<std::size_t>{1, 4}, "diagonal k=3");
  return o;
}

Outcome spec_equation() {
  Outcome o;
  for (std::size_t n = 1; n <= 9; ++n) {
    const auto xs = letters(n);
    for (std::size_t k = 0; k < n; ++k) {
      // k = 0 checks the retabulate form only; k >= 1 checks both forms.
      o.require(check_spec_equation(k, xs), "equation fails at " + at(n, k));
    }
  }
  return o;
}

Outcome rotation() {
  Outcome o;
  for (std::size_t n = 1; n <= 10; ++n) {
    for (std::size_t k = 0; k < n; ++k) o.require(check_rotation(n, k), "rotation fails at " + at(n, k));
  }
  return o;
}

Outcome law_suite() {
  Outcome o;
  gen::Rng rng(20241018);
  auto payload = [](gen::Rng& r) { return gen::uniform_int(r, -10000, 10000); };
  auto f = [](std::int64_t x) { return x * 7 - 3; };
  auto g = [](std::int64_t x) { return x / 3 + 11; };
  auto h = [](std::int64_t x) { return "v" + std::to_string(x); };
  for (int i = 0; i < 500; ++i) {
    const Shape shape = gen::random_proper_shape(rng, 8);
    const auto t = gen::random_table(rng, shape, payload);
    const std::string where = at(shape.n, shape.k);
    o.require(map_tree([](std::int64_t x) { return x; }, t) == t, "functor identity at " + where);
    o.require(map_tree([&](std::int64_t x) { return f(g(x)); }, t) == map_tree(f, map_tree(g, t)),
              "functor composition at " + where);
    auto lhs = retabulate(shape.n, shape.k, map_tree(h, t));
    auto rhs = map_tree([&](const Tree<std::int64_t>& inner) { return map_tree(h, inner); },
                        retabulate(shape.n, shape.k, t));
    o.require(lhs == rhs, "retabulate naturality at " + where);

    const std::size_t m = gen::uniform_size(rng, 0, 8);
    const auto tip = gen::random_table(rng, Shape{m, gen::uniform_size(rng, 0, 1) ? m : 0}, payload);
    o.require(h(un_tip(tip)) == un_tip(map_tree(h, tip)), "un_tip naturality");
  }
  return o;
}

Outcome td_equals_bu() {
  Outcome o;
  const auto p = digest_problem();
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      auto xs = p.generator(n, n * 100003 + i);
      o.require(td(p.solver, xs) == bu_tracked(p.solver, xs).result,
                "digest differs at n=" + std::to_string(n) + " case " + std::to_string(i));
    }
  }
  // Blank-table uniqueness: the only unit tree of each shape is blank(n, k).
  const auto candidates = gen::all_unit_skeletons(3);
  for (std::size_t n = 0; n <= 8; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const auto expected = blank(n, k);
      for (const auto& c : candidates) {
        if (validate_shape(c, n, k)) o.require(c == expected, "second unit tree at " + at(n, k));
      }
      for (const auto& mutant : gen::single_edit_mutants(expected)) {
        if (validate_shape(mutant, n, k)) o.require(mutant == expected, "mutant validates at " + at(n, k));
      }
    }
  }
  return o;
}

Outcome call_counts() {
  Outcome o;
  const auto p = digest_problem();
  auto four = run_instrumented(Algorithm::TopDown, p.solver, distinct(4), {.record_visits = true});
  o.require(four.stats.g_calls == 41, "td g_calls on 4 elements");
  std::size_t singletons = 0;
  for (const auto& [key, count] : *four.visits) {
    if (key.size() != 1) continue;
    ++singletons;
    o.require(count == 6, "a 1-sublist was not solved exactly 6 times");
  }
  o.require(singletons == 4, "expected four 1-sublists");
  o.require(bu_tracked(p.solver, distinct(4)).stats.g_calls == 15, "bu g_calls on 4 elements");

  for (std::size_t n = 0; n <= 9; ++n) {
    auto run = run_instrumented(Algorithm::TopDown, p.solver, distinct(n));
    o.require(run.stats.g_calls == td_call_count(n), "td count at n=" + std::to_string(n));
  }
  for (std::size_t n = 0; n <= 16; ++n) {
    auto run = bu_tracked(p.solver, distinct(n));
    o.require(run.stats.g_calls == bu_call_count(n), "bu count at n=" + std::to_string(n));
    o.require(run.stats.e_calls == 1, "bu e_calls at n=" + std::to_string(n));
  }
  return o;
}

Outcome nesting_bound() {
  Outcome o;
  o.require(g_bu_runs > 0, "no bu runs were recorded");
  o.require(g_bu_peak <= 2, "bu peak nesting " + std::to_string(g_bu_peak));
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  for (RemovalCost cost : {RemovalCost::Sum, RemovalCost::Max}) {
    const auto p = min_removal_cost_problem(cost);
    for (std::size_t n = 0; n <= 7; ++n) {
      for (std::uint64_t i = 0; i < 100; ++i) {
        auto xs = p.generator(n, 7777 + n * 1000 + i);
        const auto expected = brute_force_removal_oracle(cost, xs);
        o.require(td(p.solver, xs) == expected, p.name + " td at n=" + std::to_string(n));
        o.require(bu_tracked(p.solver, xs).result == expected, p.name + " bu at n=" + std::to_string(n));
      }
    }
  }
  return o;
}

template <class P>
bool round_trips(const Tree<P>& t) {
  return decode<P>(encode(t)) == t;
}

Outcome codec_round_trip() {
  Outcome o;
  gen::Rng rng(99);
  auto ints = [](gen::Rng& r) { return gen::uniform_int(r, -1000000, 1000000); };
  auto text = [](gen::Rng& r) { return gen::random_text(r, 8); };
  auto seqs = [](gen::Rng& r) {
    std::vector<std::int64_t> xs(gen::uniform_size(r, 0, 4));
    for (auto& x : xs) x = gen::uniform_int(r, -99, 99);
    return xs;
  };
  auto nested = [&](gen::Rng& r) { return gen::random_skeleton(r, 2, ints); };
  for (int i = 0; i < 1000; ++i) {
    bool ok = false;
    switch (i % 4) {
      case 0: ok = round_trips(gen::random_skeleton(rng, 6, ints)); break;
      case 1: ok = round_trips(gen::random_skeleton(rng, 6, text)); break;
      case 2: ok = round_trips(gen::random_skeleton(rng, 5, seqs)); break;
      default: ok = round_trips(gen::random_skeleton(rng, 3, nested)); break;
    }
    o.require(ok, "round trip case " + std::to_string(i));
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC01", "golden structure of choose(2, abcd)", 1, golden_structure},
      {"AC02", "shape/size law and Pascal diagonals", 1000, shape_size_law},
      {"AC03", "spec equation, cd and retabulate forms, n <= 9", 10000, spec_equation},
      {"AC04", "rotation law, n <= 10", 5000, rotation},
      {"AC05", "functor and naturality laws, 500 trees", 10000, law_suite},
      {"AC06", "td == bu on digest problem, blank uniqueness", 30000, td_equals_bu},
      {"AC07", "call counts against closed forms", 60000, call_counts},
      {"AC08", "bu nesting never exceeds 2", 1000, nesting_bound},
      {"AC09", "min-removal vs brute force", 30000, oracle_agreement},
      {"AC10", "codec round trip, 1000 trees", 5000, codec_round_trip},
  };

  // AC08 reads what the bu runs of AC06, AC07 and AC09 recorded, so it runs last.
  std::vector<std::size_t> order{0, 1, 2, 3, 4, 5, 6, 8, 9, 7};
  std::vector<std::string> lines(criteria.size());
  int failures = 0;
  for (std::size_t idx : order) {
    const auto& c = criteria[idx];
    auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    bool in_time = ms < c.limit_ms;
    bool pass = outcome.pass && in_time;
    if (!pass) ++failures;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s %s  %-50s %10.3f ms (limit %.0f ms)", pass ? "PASS" : "FAIL",
                  c.id, c.name, ms, c.limit_ms);
    lines[idx] = buf;
    if (!outcome.pass) lines[idx] += "\n     " + outcome.detail;
    if (!in_time) lines[idx] += "\n     exceeded time limit";
  }
  for (const auto& line : lines) std::printf("%s\n", line.c_str());
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
