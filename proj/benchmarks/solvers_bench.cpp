#include <benchmark/benchmark.h>

#include "ccp/generators.hpp"
#include "ccp/mec_fpt.hpp"
#include "ccp/mec_kernel.hpp"
#include "ccp/multicut.hpp"
#include "ccp/oracle.hpp"
#include "ccp/path_dp.hpp"

namespace {

using namespace ccp;

void BM_OracleMcc(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const ColoredGraph g = random_graph(12, m, 4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_mcc(g).objective_value);
}
BENCHMARK(BM_OracleMcc)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_OracleMec(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const ColoredGraph g = random_graph(12, m, 4, 7);
  for (auto _ : state) benchmark::DoNotOptimize(oracle_mec(g).objective_value);
}
BENCHMARK(BM_OracleMec)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

void BM_PathDp(benchmark::State& state) {
  const PathInstance p = make_path_instance(random_path(static_cast<std::size_t>(state.range(0)), 5, 3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcc_path(p).objective_value);
    benchmark::DoNotOptimize(mec_path(p).objective_value);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PathDp)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_TreeExact(benchmark::State& state) {
  const ColoredGraph t = random_tree(static_cast<std::size_t>(state.range(0)), 6, 11);
  for (auto _ : state) benchmark::DoNotOptimize(solve_mcc_tree(t, TreeMode::exact).objective_value);
}
BENCHMARK(BM_TreeExact)->DenseRange(10, 40, 10)->Unit(benchmark::kMillisecond);

void BM_TreeApprox(benchmark::State& state) {
  const ColoredGraph t = random_tree(static_cast<std::size_t>(state.range(0)), 6, 11);
  for (auto _ : state) benchmark::DoNotOptimize(solve_mcc_tree(t, TreeMode::approx).objective_value);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TreeApprox)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_MulticutReduce(benchmark::State& state) {
  const MulticutInstance m = random_multicut(static_cast<std::size_t>(state.range(0)), 20, 5);
  for (auto _ : state) benchmark::DoNotOptimize(reduce_multicut(m).forced.size());
}
BENCHMARK(BM_MulticutReduce)->RangeMultiplier(4)->Range(64, 4096);

void BM_KernelMec(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const ColoredGraph g = random_graph(n, n + n / 2, 8, 13);
  for (auto _ : state) benchmark::DoNotOptimize(kernelize_mec(g, 6).report.kernel_vertices);
}
BENCHMARK(BM_KernelMec)->RangeMultiplier(4)->Range(64, 4096);

void BM_ColorCodingExhaustive(benchmark::State& state) {
  const ColoredGraph t = random_tree(12, 4, 17);
  const auto h = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mec_tree_fpt(t, h, LabelMode::exhaustive, 0, 0).objective_value);
  }
}
BENCHMARK(BM_ColorCodingExhaustive)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_ColorCodingRandomized(benchmark::State& state) {
  const ColoredGraph t = random_tree(40, 6, 19);
  const auto h = static_cast<std::size_t>(state.range(0));
  const auto threads = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mec_tree_fpt(t, h, LabelMode::randomized, 64, 1, threads).objective_value);
  }
}
BENCHMARK(BM_ColorCodingRandomized)
    ->ArgsProduct({{3, 5}, {1, 4}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
