#include <benchmark/benchmark.h>

#include "cackit/bounds.hpp"
#include "cackit/channel.hpp"
#include "cackit/constructions.hpp"
#include "cackit/oracle.hpp"

using namespace cackit;

namespace {

const Cac& code5883() {
  static const Cac code = construct_c3(construct_c2(53, 2, 3), 3, construct_c2(37, 2, 3));
  return code;
}

void BM_Verify5883(benchmark::State& state) {
  const Cac& code = code5883();
  for (auto _ : state) benchmark::DoNotOptimize(verify_cac(code).ok());
}
BENCHMARK(BM_Verify5883)->Unit(benchmark::kMillisecond);

void BM_ConstructC3(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(construct_c3(construct_c2(53, 2, 3), 3, construct_c2(37, 2, 3)).size());
  }
}
BENCHMARK(BM_ConstructC3)->Unit(benchmark::kMillisecond);

void BM_MaxCac(benchmark::State& state) {
  SearchConfig cfg;
  cfg.length = static_cast<std::uint64_t>(state.range(0));
  cfg.weight = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(max_cac(cfg).best);
}
BENCHMARK(BM_MaxCac)->Args({30, 3})->Args({30, 4})->Args({30, 5})->Args({40, 4})->Unit(benchmark::kMillisecond);

void BM_ComputeF(benchmark::State& state) {
  const auto w = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::int64_t total = 0;
    for (std::uint64_t L = w; L <= 1000; ++L) total += compute_f(L, w).value;
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ComputeF)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_ComputeFLp(benchmark::State& state) {
  const auto w = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::int64_t total = 0;
    for (std::uint64_t L = w; L <= 1000; ++L) total += compute_f_lp(L, w).value;
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_ComputeFLp)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_RandomTrials(benchmark::State& state) {
  const Cac& code = code5883();
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(random_trials(code, 7, 10000, 1, threads).violation_count);
}
BENCHMARK(BM_RandomTrials)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
