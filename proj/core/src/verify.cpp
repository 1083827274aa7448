#include "sublist/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <future>
#include <string>

#include "sublist/codec.hpp"
#include "sublist/generators.hpp"
#include "sublist/induction.hpp"
#include "sublist/problems.hpp"
#include "sublist/tabulate.hpp"

namespace sublist {

namespace {

using gen::Rng;

void record(SuiteResult& suite, bool ok, const std::string& what) {
  if (ok) {
    ++suite.passed;
    return;
  }
  ++suite.failed;
  if (suite.first_failure.empty()) suite.first_failure = what;
}

std::string describe(std::size_t n, std::size_t k) {
  return "n=" + std::to_string(n) + " k=" + std::to_string(k);
}

// Distinct elements, so sublists compare as sets of positions.
std::vector<std::int64_t> iota_list(std::size_t n) {
  std::vector<std::int64_t> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<std::int64_t>(10 + i);
  return xs;
}

void choose_completeness(SuiteResult& suite, std::size_t max_n) {
  for (std::size_t n = 0; n <= max_n; ++n) {
    const auto xs = iota_list(n);
    for (std::size_t k = 0; k <= n; ++k) {
      auto got = flatten(choose(k, xs));
      std::vector<std::vector<std::int64_t>> expected;
      for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != k) continue;
        std::vector<std::int64_t> ys;
        for (std::size_t i = 0; i < n; ++i) {
          if (mask & (1u << i)) ys.push_back(xs[i]);
        }
        expected.push_back(std::move(ys));
      }
      const bool right_count = got.size() == binomial(n, k);
      std::sort(got.begin(), got.end());
      std::sort(expected.begin(), expected.end());
      record(suite, right_count && got == expected && validate_shape(choose(k, xs), n, k),
             "choose " + describe(n, k));
    }
  }
}

void spec_equation(SuiteResult& suite, std::size_t max_n) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto xs = iota_list(n);
    for (std::size_t k = 0; k < n; ++k) {
      record(suite, check_spec_equation(k, xs), "spec equation " + describe(n, k));
    }
  }
}

void rotation(SuiteResult& suite, std::size_t max_n) {
  for (std::size_t n = 1; n <= max_n; ++n) {
    for (std::size_t k = 0; k < n; ++k) {
      record(suite, check_rotation(n, k), "rotation " + describe(n, k));
    }
  }
}

std::int64_t small_int(Rng& rng) { return gen::uniform_int(rng, -1000, 1000); }

void functor_laws(SuiteResult& suite, std::size_t max_n, std::uint64_t seed) {
  Rng rng(seed);
  auto f = [](std::int64_t x) { return 3 * x + 1; };
  auto g = [](std::int64_t x) { return x * x - 7; };
  for (int i = 0; i < 500; ++i) {
    Shape shape = gen::random_shape(rng, max_n);
    auto t = gen::random_table(rng, shape, small_int);
    auto u = gen::random_table(rng, shape, small_int);
    bool ok = map_tree([](std::int64_t x) { return x; }, t) == t;
    ok = ok && map_tree([&](std::int64_t x) { return f(g(x)); }, t) == map_tree(f, map_tree(g, t));
    ok = ok && zip_with([](std::int64_t a, std::int64_t) { return a; }, t, u) == t;
    ok = ok && zip_with([](std::int64_t, std::int64_t b) { return b; }, t, u) == u;
    auto mapped = flatten(map_tree(f, t));
    auto flat = flatten(t);
    std::transform(flat.begin(), flat.end(), flat.begin(), f);
    ok = ok && mapped == flat && validate_shape(map_tree(f, t), shape);
    record(suite, ok, "functor laws at " + describe(shape.n, shape.k));
  }
}

void naturality(SuiteResult& suite, std::size_t max_n, std::uint64_t seed) {
  Rng rng(seed);
  auto f = [](std::int64_t x) { return std::to_string(x) + "!"; };
  for (int i = 0; i < 500; ++i) {
    Shape shape = gen::random_proper_shape(rng, std::max<std::size_t>(max_n, 1));
    auto t = gen::random_table(rng, shape, small_int);
    auto lhs = retabulate(shape.n, shape.k, map_tree(f, t));
    auto plain = retabulate(shape.n, shape.k, t);
    auto rhs = map_tree([&](const Tree<std::int64_t>& inner) { return map_tree(f, inner); }, plain);
    bool ok = lhs == rhs && validate_shape(plain, shape.n, shape.k + 1);
    for (const auto& inner : flatten(plain)) ok = ok && validate_shape(inner, shape.k + 1, shape.k);
    record(suite, ok, "retabulate naturality at " + describe(shape.n, shape.k));

    auto tip = gen::uniform_size(rng, 0, 1) ? Tree<std::int64_t>::tip_z(small_int(rng))
                                            : Tree<std::int64_t>::tip_s(small_int(rng));
    record(suite, f(un_tip(tip)) == un_tip(map_tree(f, tip)), "un_tip naturality");
  }
}

void blank_uniqueness(SuiteResult& suite, std::size_t max_n) {
  const auto candidates = gen::all_unit_skeletons(3);
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      const auto expected = blank(n, k);
      bool ok = validate_shape(expected, n, k) && size(expected) == binomial(n, k);
      for (const auto& c : candidates) {
        if (validate_shape(c, n, k)) ok = ok && c == expected;
      }
      for (const auto& m : gen::single_edit_mutants(expected)) {
        if (validate_shape(m, n, k)) ok = ok && m == expected;
      }
      record(suite, ok, "blank uniqueness " + describe(n, k));
    }
    for (const auto& c : candidates) {
      if (validate_shape(c, n, n + 1)) record(suite, false, "tree validated with k > n");
    }
  }
}

void td_equals_bu(SuiteResult& suite, SuiteResult& nesting, std::size_t max_n, std::uint64_t seed) {
  const auto problem = digest_problem();
  for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 8); ++n) {
    for (std::uint64_t i = 0; i < 200; ++i) {
      auto xs = problem.generator(n, seed * 1000003 + n * 1009 + i);
      auto top = td(problem.solver, xs);
      auto bottom = run_instrumented(Algorithm::BottomUp, problem.solver, xs);
      record(suite, top == bottom.result, "td != bu for n=" + std::to_string(n));
      record(nesting, bottom.stats.peak_nesting <= 2 &&
                          bottom.stats.peak_nesting == (n == 0 ? 1u : 2u),
             "bu nesting " + std::to_string(bottom.stats.peak_nesting) + " at n=" +
                 std::to_string(n));
    }
  }
}

std::uint64_t factorial(std::size_t n) { return td_e_call_count(n); }

void call_counts(SuiteResult& suite, SuiteResult& nesting, std::size_t max_n) {
  const auto problem = digest_problem();
  for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 9); ++n) {
    auto xs = iota_list(n);
    auto run = run_instrumented(Algorithm::TopDown, problem.solver, xs, {.record_visits = true});
    bool ok = run.stats.g_calls == td_call_count(n) && run.stats.e_calls == factorial(n);
    // Every k-sublist with k >= 1 is reached along (n - k)! paths.
    for (const auto& [key, count] : *run.visits) ok = ok && count == factorial(n - key.size());
    record(suite, ok, "td counts at n=" + std::to_string(n));
  }
  for (std::size_t n = 0; n <= max_n; ++n) {
    auto run = run_instrumented(Algorithm::BottomUp, problem.solver, iota_list(n),
                                {.record_visits = true});
    bool ok = run.stats.g_calls == bu_call_count(n) && run.stats.e_calls == 1;
    for (const auto& entry : *run.visits) ok = ok && entry.second == 1;
    record(suite, ok, "bu counts at n=" + std::to_string(n));
    record(nesting, run.stats.peak_nesting <= 2, "bu nesting at n=" + std::to_string(n));
  }
}

void oracle_agreement(SuiteResult& suite, std::size_t max_n, std::uint64_t seed) {
  for (RemovalCost cost : {RemovalCost::Sum, RemovalCost::Max}) {
    const auto problem = min_removal_cost_problem(cost);
    for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 7); ++n) {
      for (std::uint64_t i = 0; i < 100; ++i) {
        auto xs = problem.generator(n, seed * 7919 + n * 131 + i);
        auto expected = problem.oracle(xs);
        record(suite,
               td(problem.solver, xs) == expected && bu(problem.solver, xs) == expected,
               problem.name + " disagrees with brute force at n=" + std::to_string(n));
      }
    }
  }
  const auto count = subtree_count_problem();
  for (std::size_t n = 0; n <= std::min<std::size_t>(max_n, 8); ++n) {
    auto xs = count.generator(n, seed + n);
    auto expected = count.oracle(xs);
    record(suite, td(count.solver, xs) == expected && bu(count.solver, xs) == expected,
           "subtree-count closed form at n=" + std::to_string(n));
  }
}

template <class P>
bool round_trips(const Tree<P>& t) {
  return decode<P>(encode(t)) == t;
}

void codec_round_trip(SuiteResult& suite, std::uint64_t seed) {
  Rng rng(seed);
  auto text = [](Rng& r) { return gen::random_text(r, 6); };
  auto ints = [](Rng& r) {
    std::vector<std::int64_t> xs(gen::uniform_size(r, 0, 3));
    for (auto& x : xs) x = small_int(r);
    return xs;
  };
  auto nested = [](Rng& r) { return gen::random_skeleton(r, 2, small_int); };
  auto unit = [](Rng&) { return Unit{}; };
  for (int i = 0; i < 1000; ++i) {
    bool ok = false;
    switch (i % 5) {
      case 0: ok = round_trips(gen::random_skeleton(rng, 5, small_int)); break;
      case 1: ok = round_trips(gen::random_skeleton(rng, 5, text)); break;
      case 2: ok = round_trips(gen::random_skeleton(rng, 4, ints)); break;
      case 3: ok = round_trips(gen::random_skeleton(rng, 3, nested)); break;
      default: ok = round_trips(gen::random_skeleton(rng, 6, unit)); break;
    }
    record(suite, ok, "codec round trip case " + std::to_string(i));
  }
}

}  // namespace

bool VerifyReport::ok() const noexcept {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

VerifyReport run_verification(std::size_t max_n, std::uint64_t seed) {
  if (max_n > kVerifyMaxN) {
    throw SizeLimit("verify: n = " + std::to_string(max_n) + " exceeds " +
                    std::to_string(kVerifyMaxN));
  }
  using Job = std::function<std::vector<SuiteResult>()>;
  auto single = [](std::string name, std::function<void(SuiteResult&)> body) -> Job {
    return [name = std::move(name), body = std::move(body)] {
      SuiteResult s{name, 0, 0, {}};
      body(s);
      return std::vector<SuiteResult>{s};
    };
  };
  const std::size_t law_n = std::min<std::size_t>(max_n, 8);
  std::vector<Job> jobs{
      single("choose-completeness", [=](SuiteResult& s) { choose_completeness(s, max_n); }),
      single("spec-equation", [=](SuiteResult& s) { spec_equation(s, max_n); }),
      single("rotation", [=](SuiteResult& s) { rotation(s, max_n); }),
      single("functor-laws", [=](SuiteResult& s) { functor_laws(s, law_n, seed); }),
      single("naturality", [=](SuiteResult& s) { naturality(s, law_n, seed + 1); }),
      single("blank-uniqueness", [=](SuiteResult& s) { blank_uniqueness(s, max_n); }),
      [=] {
        SuiteResult eq{"td-equals-bu", 0, 0, {}}, nest{"bu-nesting", 0, 0, {}};
        td_equals_bu(eq, nest, max_n, seed);
        return std::vector<SuiteResult>{eq, nest};
      },
      [=] {
        SuiteResult counts{"call-counts", 0, 0, {}}, nest{"bu-nesting-counted", 0, 0, {}};
        call_counts(counts, nest, max_n);
        return std::vector<SuiteResult>{counts, nest};
      },
      single("oracle-agreement", [=](SuiteResult& s) { oracle_agreement(s, max_n, seed); }),
      single("codec-round-trip", [=](SuiteResult& s) { codec_round_trip(s, seed); }),
  };

  // Suites run concurrently; results are collected in declaration order.
  std::vector<std::future<std::vector<SuiteResult>>> pending;
  pending.reserve(jobs.size());
  for (auto& job : jobs) {
    pending.push_back(std::async(std::launch::async, [job]() -> std::vector<SuiteResult> {
      try {
        return job();
      } catch (const std::exception& e) {
        return {SuiteResult{"uncaught-exception", 0, 1, e.what()}};
      }
    }));
  }

  VerifyReport report{max_n, seed, {}};
  for (auto& p : pending) {
    for (auto& s : p.get()) report.suites.push_back(std::move(s));
  }
  return report;
}

}  // namespace sublist
