// Serial reference loop against the OpenMP sweep on the same graph lists.

#include <benchmark/benchmark.h>

#include "kpath/harness.hpp"

namespace {

const std::vector<kpath::Graph>& graphs(int max_n) {
  static std::vector<std::vector<kpath::Graph>> cache(11);
  auto& out = cache[max_n];
  if (out.empty()) {
    for (int n = 1; n <= max_n; ++n) {
      auto level = kpath::enumerate_graphs(n, true);
      out.insert(out.end(), level.begin(), level.end());
    }
  }
  return out;
}

void BM_Theorem6Serial(benchmark::State& state) {
  const auto& gs = graphs(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kpath::run_check_serial(gs, kpath::CheckKind::Theorem6, 4));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(gs.size()));
}

void BM_Theorem6Parallel(benchmark::State& state) {
  const auto& gs = graphs(static_cast<int>(state.range(0)));
  kpath::HarnessOptions options;
  options.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kpath::run_check(gs, kpath::CheckKind::Theorem6, 4, options));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(gs.size()));
}

void BM_LpDualitySerial(benchmark::State& state) {
  const auto& gs = graphs(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kpath::run_check_serial(gs, kpath::CheckKind::LpDuality, 3));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(gs.size()));
}

void BM_LpDualityParallel(benchmark::State& state) {
  const auto& gs = graphs(static_cast<int>(state.range(0)));
  kpath::HarnessOptions options;
  options.threads = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kpath::run_check(gs, kpath::CheckKind::LpDuality, 3, options));
  state.SetItemsProcessed(state.iterations() * static_cast<long long>(gs.size()));
}

}  // namespace

BENCHMARK(BM_Theorem6Serial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Theorem6Parallel)->ArgsProduct({{7, 8}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LpDualitySerial)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LpDualityParallel)->ArgsProduct({{6, 7}, {1, 2, 4}})->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
