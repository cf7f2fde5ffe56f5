// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <random>

#include "bg/adjacency.hpp"
#include "bg/balance.hpp"
#include "bg/core.hpp"
#include "bg/mbc.hpp"
#include "bg/parallel.hpp"

namespace {

bg::Game bench_game(int n) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> num(0, 8);
  const bg::Game v = bg::Game::from_function(n, [&](bg::Coalition s) -> bg::Rational {
    return s.size() == n ? bg::Rational(0) : bg::Rational(num(rng), 4) * s.size();
  });
  // raise v(N) to the balancing value so the core is nonempty
  const auto verdict = bg::is_balanced_lp(v);
  return verdict.balanced ? v : v.with(bg::Coalition::grand(n), v.grand_value() + verdict.slack);
}

void BM_mbc_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(bg::enumerate_mbc_serial(static_cast<int>(st.range(0))));
}
void BM_mbc_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(bg::enumerate_mbc(static_cast<int>(st.range(0))));
}

void BM_core_serial(benchmark::State& st) {
  const bg::Game v = bench_game(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(bg::core_vertices_serial(v));
}
void BM_core_parallel(benchmark::State& st) {
  const bg::Game v = bench_game(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(bg::core_vertices(v));
}

void BM_graph_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(bg::adjacency_graph_serial(3));
}
void BM_graph_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(bg::adjacency_graph(3));
}

}  // namespace

BENCHMARK(BM_mbc_serial)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mbc_parallel)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_core_serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_core_parallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_graph_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_graph_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
