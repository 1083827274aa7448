#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <string>

#include "sublist/codec.hpp"
#include "sublist/problems.hpp"
#include "sublist/render.hpp"
#include "sublist/tabulate.hpp"
#include "sublist/verify.hpp"

namespace sublist::cli {

namespace {

using nlohmann::json;

std::string hex64(std::uint64_t v) {
  char buf[19];
  std::snprintf(buf, sizeof buf, "0x%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json stats_json(const CallStats& stats) {
  return {{"g_calls", stats.g_calls},
          {"e_calls", stats.e_calls},
          {"peak_nesting", stats.peak_nesting},
          {"wall_ns", stats.wall_ns}};
}

std::size_t limit_for(Algorithm alg) {
  return alg == Algorithm::TopDown ? kTopDownLimit : kBottomUpLimit;
}

std::vector<std::string> problem_names() {
  std::vector<std::string> names;
  for (const auto& entry : problem_registry()) names.push_back(entry.name);
  return names;
}

int cmd_verify(std::size_t n, std::uint64_t seed, std::ostream& out) {
  VerifyReport report = run_verification(n, seed);
  json suites = json::array();
  for (const auto& s : report.suites) {
    json j = {{"name", s.name}, {"passed", s.passed}, {"failed", s.failed}};
    if (!s.ok()) j["first_failure"] = s.first_failure;
    suites.push_back(std::move(j));
  }
  json summary = {{"command", "verify"},
                  {"max_n", report.max_n},
                  {"seed", report.seed},
                  {"ok", report.ok()},
                  {"suites", std::move(suites)}};
  out << summary.dump() << '\n';
  return report.ok() ? kSuccess : kVerificationFailed;
}

int cmd_bench(std::size_t n, Algorithm alg, const ProblemEntry& problem, std::ostream& out,
              std::ostream& err) {
  if (n > limit_for(alg)) {
    err << "error: bench --alg " << to_string(alg) << " accepts n <= " << limit_for(alg) << '\n';
    return kSizeLimit;
  }
  ProblemRun run = problem.run(problem.generate(n, 0), alg);
  std::uint64_t expected = alg == Algorithm::TopDown ? td_call_count(n) : bu_call_count(n);
  json report = {{"n", n},
                 {"alg", to_string(alg)},
                 {"problem", problem.name},
                 {"g_calls", run.stats.g_calls},
                 {"e_calls", run.stats.e_calls},
                 {"peak_nesting", run.stats.peak_nesting},
                 {"wall_ns", run.stats.wall_ns},
                 {"result_digest", hex64(run.solution_digest)}};
  out << report.dump() << '\n';
  if (run.stats.g_calls != expected) {
    err << "error: g_calls " << run.stats.g_calls << " differs from closed form " << expected
        << '\n';
    return kVerificationFailed;
  }
  return kSuccess;
}

int cmd_solve(const ProblemEntry& problem, const std::string& input, Algorithm alg,
              std::ostream& out, std::ostream& err) {
  std::size_t length = split_input(input).size();
  if (length > limit_for(alg)) {
    err << "error: solve --alg " << to_string(alg) << " accepts at most " << limit_for(alg)
        << " elements, got " << length << '\n';
    return kSizeLimit;
  }
  ProblemRun run = problem.run(input, alg);
  json stats = stats_json(run.stats);
  stats["problem"] = problem.name;
  stats["alg"] = to_string(alg);
  stats["n"] = length;
  stats["result_digest"] = hex64(run.solution_digest);
  out << run.solution << '\n' << stats.dump() << '\n';
  return kSuccess;
}

template <class Seq>
void print_table(const Seq& xs, std::size_t k, const std::string& format, std::ostream& out) {
  auto table = choose(k, xs);
  if (format == "ascii") {
    out << render_ascii(table);
  } else {
    out << encode(table) << '\n';
  }
}

int cmd_render(const std::string& input, std::size_t k, const std::string& format,
               std::ostream& out) {
  if (input.find(',') == std::string::npos) {
    print_table(input, k, format, out);
  } else {
    print_table(split_input(input), k, format, out);
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sublist-lattice tabulation: law checks, benchmarks, solvers and rendering",
               "sublist"};
  app.require_subcommand(1);

  const auto algorithms = std::vector<std::string>{"td", "bu"};
  const auto problems = problem_names();

  std::size_t verify_n = 0;
  std::uint64_t verify_seed = 0;
  auto* verify = app.add_subcommand("verify", "Run every law and property suite");
  verify->add_option("--n", verify_n, "Largest list length swept")
      ->required()
      ->check(CLI::Range(std::size_t{0}, kVerifyMaxN));
  verify->add_option("--seed", verify_seed, "Seed for randomized suites");

  std::size_t bench_n = 0;
  std::string bench_alg, bench_problem;
  auto* bench = app.add_subcommand("bench", "Instrumented run on a generated input");
  bench->add_option("--n", bench_n, "Input length")->required();
  bench->add_option("--alg", bench_alg)->required()->check(CLI::IsMember(algorithms));
  bench->add_option("--problem", bench_problem)->required()->check(CLI::IsMember(problems));

  std::string solve_problem, solve_input, solve_alg;
  auto* solve = app.add_subcommand("solve", "Solve a problem on the given input");
  solve->add_option("--problem", solve_problem)->required()->check(CLI::IsMember(problems));
  solve->add_option("--input", solve_input, "Comma-separated tokens or a bare string")
      ->required();
  solve->add_option("--alg", solve_alg)->required()->check(CLI::IsMember(algorithms));

  std::string render_input, render_format = "text";
  std::size_t render_k = 0;
  auto* render = app.add_subcommand("render", "Print the k-sublist table of the input");
  render->add_option("--input", render_input)->required();
  render->add_option("--k", render_k)->required();
  render->add_option("--format", render_format)
      ->check(CLI::IsMember(std::vector<std::string>{"text", "ascii"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsageError;
  }

  try {
    if (*verify) return cmd_verify(verify_n, verify_seed, out);
    if (*bench) {
      return cmd_bench(bench_n, *parse_algorithm(bench_alg), *find_problem(bench_problem), out,
                       err);
    }
    if (*solve) {
      return cmd_solve(*find_problem(solve_problem), solve_input, *parse_algorithm(solve_alg),
                       out, err);
    }
    if (*render) return cmd_render(render_input, render_k, render_format, out);
  } catch (const SizeLimit& e) {
    err << "error: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const Overflow& e) {
    err << "error: " << e.what() << '\n';
    return kSizeLimit;
  } catch (const Error& e) {
    // InvalidLevel, ParseError and friends: bad user input.
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace sublist::cli
