#include <benchmark/benchmark.h>

#include <random>

#include "pony/graph_delivery.hpp"
#include "pony/offline_multi.hpp"

namespace {

pony::Instance instance(std::size_t robots) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> c(-5, 5), v(1, 4);
  pony::Instance inst{{c(rng), c(rng)}, {c(rng), c(rng)}, {}};
  for (std::size_t i = 0; i < robots; ++i) inst.robots.push_back({{c(rng), c(rng)}, v(rng)});
  return inst;
}

// Robots and eps' both drive the lattice size.
void BM_SolveMulti(benchmark::State& state) {
  const auto inst = instance(static_cast<std::size_t>(state.range(0)));
  const double eps_prime = 1.0 / static_cast<double>(state.range(1));
  std::size_t side = 0;
  for (auto _ : state) {
    auto sol = pony::solve_multi_detailed(inst, eps_prime);
    side = sol.grid.cols;
    benchmark::DoNotOptimize(sol);
  }
  state.counters["side"] = static_cast<double>(side);
}

void BM_BuildGrid(benchmark::State& state) {
  const auto inst = instance(8);
  for (auto _ : state) benchmark::DoNotOptimize(pony::build_grid(inst, 0.05));
}

void BM_GraphDeliveryPath(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  pony::GraphDeliveryProblem p;
  p.num_vertices = n;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> w(0.5, 2.0);
  for (std::size_t v = 1; v < n; ++v) p.edges.push_back({v - 1, v, w(rng)});
  for (std::size_t v = 0; v + 7 < n; v += 5) p.edges.push_back({v, v + 7, w(rng)});
  for (std::size_t a = 0; a < 8; ++a) p.agents.push_back({(a * 7919) % n, 1.0 + 0.4 * a});
  p.source = n / 3;
  p.dest = n - 1;
  for (auto _ : state) benchmark::DoNotOptimize(pony::solve_graph_delivery(p));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_SolveMulti)
    ->Args({3, 10})
    ->Args({3, 20})
    ->Args({8, 20})
    ->Args({8, 40})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildGrid)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_GraphDeliveryPath)->RangeMultiplier(4)->Range(64, 16384)->Complexity()->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
