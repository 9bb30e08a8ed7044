#include <benchmark/benchmark.h>

#include "pony/lower_bounds.hpp"
#include "pony/online.hpp"

namespace {

void BM_SpeedSearch(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pony::lb_speed_search(r, r, r));
}

void BM_PositionSearch(benchmark::State& state) {
  const auto r = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pony::lb_position_search(r, r));
}

void BM_RelayConstruction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(pony::build_relay_construction(n));
}

}  // namespace

BENCHMARK(BM_SpeedSearch)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PositionSearch)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RelayConstruction)->DenseRange(3, 10)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
