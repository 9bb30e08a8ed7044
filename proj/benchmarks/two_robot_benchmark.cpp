#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "pony/offline_two.hpp"
#include "pony/online.hpp"
#include "pony/oracle.hpp"

namespace {

struct Draw {
  pony::Point l, k, s, d;
  double v;
};

std::vector<Draw> draws(std::size_t count, double v_hi) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> c(-5, 5), v(1.05, v_hi);
  std::vector<Draw> out(count);
  for (auto& t : out) t = {{c(rng), c(rng)}, {c(rng), c(rng)}, {c(rng), c(rng)}, {c(rng), c(rng)}, v(rng)};
  return out;
}

void BM_SolveTwoGeneral(benchmark::State& state) {
  const auto ts = draws(256, 10.0);
  std::size_t i = 0;
  for (auto _ : state) {
    const Draw& t = ts[i++ % ts.size()];
    benchmark::DoNotOptimize(pony::solve_two_general(t.l, t.k, t.s, t.d, t.v));
  }
}

void BM_SolveTwoAtSource(benchmark::State& state) {
  const auto ts = draws(256, 10.0);
  std::size_t i = 0;
  for (auto _ : state) {
    const Draw& t = ts[i++ % ts.size()];
    benchmark::DoNotOptimize(pony::solve_two_at_source(t.k, t.s, t.d, t.v));
  }
}

void BM_CompetitiveRatio(benchmark::State& state) {
  const auto ts = draws(256, 10.0);
  std::size_t i = 0;
  for (auto _ : state) {
    const Draw& t = ts[i++ % ts.size()];
    const pony::Instance inst{t.s, t.d, {pony::Robot{t.l, 1.0}, pony::Robot{t.k, t.v}}};
    benchmark::DoNotOptimize(pony::competitive_ratio_two(inst));
  }
}

void BM_OracleTwoRobot(benchmark::State& state) {
  const auto ts = draws(8, 4.0);
  pony::oracle::OracleConfig cfg;
  cfg.grid_resolution = static_cast<std::size_t>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    const Draw& t = ts[i++ % ts.size()];
    benchmark::DoNotOptimize(pony::oracle::oracle_two_robot(t.l, t.k, t.s, t.d, t.v, cfg));
  }
}

}  // namespace

BENCHMARK(BM_SolveTwoGeneral)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_SolveTwoAtSource)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CompetitiveRatio)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_OracleTwoRobot)->Arg(300)->Arg(1500)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
