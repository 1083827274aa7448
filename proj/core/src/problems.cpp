#include "sublist/problems.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "sublist/codec.hpp"
#include "sublist/hash.hpp"

namespace sublist {

namespace {

std::int64_t removal_step(RemovalCost cost, const std::vector<std::int64_t>& ys) {
  if (cost == RemovalCost::Sum) return std::accumulate(ys.begin(), ys.end(), std::int64_t{0});
  return *std::max_element(ys.begin(), ys.end());
}

std::vector<std::int64_t> random_ints(std::size_t size, std::uint64_t seed, std::int64_t lo,
                                      std::int64_t hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(lo, hi);
  std::vector<std::int64_t> xs(size);
  for (auto& x : xs) x = dist(rng);
  return xs;
}

struct Token {
  std::string_view text;
  std::size_t offset;
};

std::vector<Token> tokenize(std::string_view input) {
  std::vector<Token> tokens;
  if (input.empty()) return tokens;
  if (input.find(',') == std::string_view::npos) {
    for (std::size_t i = 0; i < input.size(); ++i) tokens.push_back({input.substr(i, 1), i});
    return tokens;
  }
  std::size_t start = 0;
  while (true) {
    std::size_t comma = input.find(',', start);
    std::size_t end = comma == std::string_view::npos ? input.size() : comma;
    tokens.push_back({input.substr(start, end - start), start});
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  // A trailing comma ends the list rather than adding an empty element.
  if (input.back() == ',') tokens.pop_back();
  return tokens;
}

std::vector<std::int64_t> parse_ints(std::string_view input) {
  std::vector<std::int64_t> xs;
  for (const Token& tok : tokenize(input)) {
    std::int64_t value{};
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [end, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || end != last || tok.text.empty()) {
      throw ParseError("expected integer element, got '" + std::string(tok.text) + "'",
                       tok.offset);
    }
    xs.push_back(value);
  }
  return xs;
}

std::vector<std::string> parse_strings(std::string_view input) {
  std::vector<std::string> xs;
  for (const Token& tok : tokenize(input)) xs.emplace_back(tok.text);
  return xs;
}

template <class E, class S>
ProblemRun run_named(const Problem<E, S>& problem, const std::vector<E>& xs, Algorithm alg) {
  auto run = run_instrumented(alg, problem.solver, xs);
  ProblemRun out;
  out.solution = encode_payload(run.result);
  out.solution_digest = fnv1a64(out.solution);
  out.stats = run.stats;
  return out;
}

std::string join_csv(const std::vector<std::string>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ',';
    out += tokens[i];
  }
  return out;
}

template <class E>
std::string to_csv(const std::vector<E>& xs) {
  std::vector<std::string> tokens;
  for (const auto& x : xs) {
    if constexpr (std::is_same_v<E, std::string>) {
      tokens.push_back(x);
    } else {
      tokens.push_back(std::to_string(x));
    }
  }
  std::string csv = join_csv(tokens);
  // A single token needs a trailing comma to stay comma-separated.
  if (tokens.size() == 1) csv += ',';
  return csv;
}

}  // namespace

std::uint64_t digest_combine(const std::vector<std::int64_t>& ys,
                             std::span<const std::uint64_t> children) {
  Fnv1a64 h;
  h.add(encode_payload(ys));
  for (std::uint64_t c : children) h.add_u64(c);
  return h.value();
}

Problem<std::int64_t, std::uint64_t> digest_problem() {
  Problem<std::int64_t, std::uint64_t> p;
  p.name = "digest";
  p.element_domain = "64-bit signed integers";
  p.solver.e = [] { return kDigestSeed; };
  p.solver.g = [](const std::vector<std::int64_t>& ys, const Tree<std::uint64_t>& children) {
    auto flat = flatten(children);
    return digest_combine(ys, flat);
  };
  auto solver = p.solver;
  p.oracle = [solver](const std::vector<std::int64_t>& xs) { return td(solver, xs); };
  p.generator = [](std::size_t size, std::uint64_t seed) {
    return random_ints(size, seed, -50, 50);
  };
  p.oracle_bound = 9;
  return p;
}

std::uint64_t subtree_count_closed_form(std::uint64_t m) {
  std::uint64_t s = 1;
  for (std::uint64_t i = 1; i <= m; ++i) {
    std::uint64_t prod;
    if (__builtin_mul_overflow(i, s, &prod) || __builtin_add_overflow(prod, 1, &s)) {
      throw Overflow("subtree count exceeds 64 bits at m = " + std::to_string(i));
    }
  }
  return s;
}

Problem<std::string, std::uint64_t> subtree_count_problem() {
  Problem<std::string, std::uint64_t> p;
  p.name = "subtree-count";
  p.element_domain = "arbitrary tokens";
  p.solver.e = [] { return std::uint64_t{1}; };
  p.solver.g = [](const std::vector<std::string>&, const Tree<std::uint64_t>& children) {
    std::uint64_t total = 1;
    for (std::uint64_t c : flatten(children)) {
      if (__builtin_add_overflow(total, c, &total)) throw Overflow("subtree count exceeds 64 bits");
    }
    return total;
  };
  p.oracle = [](const std::vector<std::string>& xs) { return subtree_count_closed_form(xs.size()); };
  p.generator = [](std::size_t size, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> letter(0, 25);
    std::vector<std::string> xs(size);
    for (auto& x : xs) x = std::string(1, static_cast<char>('a' + letter(rng)));
    return xs;
  };
  p.oracle_bound = 20;
  return p;
}

Problem<std::int64_t, std::int64_t> min_removal_cost_problem(RemovalCost cost) {
  Problem<std::int64_t, std::int64_t> p;
  p.name = cost == RemovalCost::Sum ? "min-removal-sum" : "min-removal-max";
  p.element_domain = "64-bit signed integers";
  p.solver.e = [] { return std::int64_t{0}; };
  p.solver.g = [cost](const std::vector<std::int64_t>& ys, const Tree<std::int64_t>& children) {
    auto flat = flatten(children);
    return removal_step(cost, ys) + *std::min_element(flat.begin(), flat.end());
  };
  p.oracle = [cost](const std::vector<std::int64_t>& xs) {
    return brute_force_removal_oracle(cost, xs);
  };
  p.generator = [](std::size_t size, std::uint64_t seed) { return random_ints(size, seed, 0, 20); };
  p.oracle_bound = kRemovalOracleBound;
  return p;
}

std::int64_t brute_force_removal_oracle(RemovalCost cost, const std::vector<std::int64_t>& xs) {
  if (xs.size() > kRemovalOracleBound) {
    throw SizeLimit("brute_force_removal_oracle: |xs| = " + std::to_string(xs.size()) +
                    " exceeds " + std::to_string(kRemovalOracleBound));
  }
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do {
    std::vector<bool> removed(xs.size(), false);
    std::int64_t total = 0;
    for (std::size_t victim : order) {
      std::vector<std::int64_t> current;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!removed[i]) current.push_back(xs[i]);
      }
      total += removal_step(cost, current);
      removed[victim] = true;
    }
    best = std::min(best, total);
  } while (std::next_permutation(order.begin(), order.end()));
  return xs.empty() ? 0 : best;
}

std::vector<std::string> split_input(std::string_view input) { return parse_strings(input); }

const std::vector<ProblemEntry>& problem_registry() {
  static const std::vector<ProblemEntry> registry = [] {
    std::vector<ProblemEntry> entries;
    {
      auto problem = digest_problem();
      entries.push_back({problem.name, "order-sensitive FNV-1a digest of the sublist lattice",
                         [problem](std::string_view input, Algorithm alg) {
                           return run_named(problem, parse_ints(input), alg);
                         },
                         [problem](std::size_t n, std::uint64_t seed) {
                           return to_csv(problem.generator(n, seed));
                         }});
    }
    {
      auto problem = subtree_count_problem();
      entries.push_back({problem.name, "1 + sum of immediate-sublist solutions",
                         [problem](std::string_view input, Algorithm alg) {
                           return run_named(problem, parse_strings(input), alg);
                         },
                         [problem](std::size_t n, std::uint64_t seed) {
                           return to_csv(problem.generator(n, seed));
                         }});
    }
    for (RemovalCost cost : {RemovalCost::Sum, RemovalCost::Max}) {
      auto problem = min_removal_cost_problem(cost);
      entries.push_back({problem.name,
                         cost == RemovalCost::Sum ? "cheapest deletion order, cost = sum"
                                                  : "cheapest deletion order, cost = max",
                         [problem](std::string_view input, Algorithm alg) {
                           return run_named(problem, parse_ints(input), alg);
                         },
                         [problem](std::size_t n, std::uint64_t seed) {
                           return to_csv(problem.generator(n, seed));
                         }});
    }
    return entries;
  }();
  return registry;
}

const ProblemEntry* find_problem(std::string_view name) {
  for (const auto& entry : problem_registry()) {
    if (entry.name == name) return &entry;
  }
  return nullptr;
}

}  // namespace sublist
