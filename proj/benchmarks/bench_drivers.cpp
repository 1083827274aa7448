#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "sublist/induction.hpp"
#include "sublist/problems.hpp"
#include "sublist/tabulate.hpp"

using namespace sublist;

namespace {

std::string letters(std::size_t n) {
  std::string xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(static_cast<char>('a' + i));
  return xs;
}

void run_driver(benchmark::State& state, Algorithm alg) {
  const auto p = digest_problem();
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto xs = p.generator(n, 0);
  for (auto _ : state) benchmark::DoNotOptimize(solve(alg, p.solver, xs));
  state.counters["g_calls"] = static_cast<double>(
      alg == Algorithm::TopDown ? td_call_count(n) : bu_call_count(n));
}

void BM_TopDown(benchmark::State& state) { run_driver(state, Algorithm::TopDown); }
void BM_BottomUp(benchmark::State& state) { run_driver(state, Algorithm::BottomUp); }

void BM_Choose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto xs = letters(n);
  for (auto _ : state) benchmark::DoNotOptimize(choose(n / 2, xs));
}

void BM_Retabulate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto table = choose(n / 2, letters(n));
  for (auto _ : state) benchmark::DoNotOptimize(retabulate(n, n / 2, table));
}

void BM_RetabulateUnchecked(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto table = choose(n / 2, letters(n));
  set_shape_checks(false);
  for (auto _ : state) benchmark::DoNotOptimize(retabulate(n, n / 2, table));
  set_shape_checks(true);
}

}  // namespace

BENCHMARK(BM_TopDown)->DenseRange(2, 9);
BENCHMARK(BM_BottomUp)->DenseRange(2, 9)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(BM_Choose)->DenseRange(4, 16, 4);
BENCHMARK(BM_Retabulate)->DenseRange(4, 16, 4);
BENCHMARK(BM_RetabulateUnchecked)->DenseRange(4, 16, 4);

BENCHMARK_MAIN();
