#include <gtest/gtest.h>

#include <random>

#include "pony/error.hpp"
#include "pony/graph_delivery.hpp"
#include "pony/oracle.hpp"
#include "random_instances.hpp"

namespace pony {
namespace {

GraphDeliveryProblem path_s_a_d_x() {
  // S -1- a -1- D -2- X
  GraphDeliveryProblem p;
  p.num_vertices = 4;
  p.edges = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 2.0}};
  p.source = 0;
  p.dest = 2;
  return p;
}

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const PonyError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidInput;
}

GraphDeliveryProblem random_problem(std::mt19937_64& rng, std::size_t n, std::size_t agents) {
  GraphDeliveryProblem p;
  p.num_vertices = n;
  std::uniform_real_distribution<double> weight(0.5, 3.0), speed(0.5, 4.0), coin(0.0, 1.0);
  // A random spanning path keeps the graph connected; extra edges at random.
  for (std::size_t v = 1; v < n; ++v) p.edges.push_back({v - 1, v, weight(rng)});
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 2; v < n; ++v)
      if (coin(rng) < 0.4) p.edges.push_back({u, v, weight(rng)});
  std::uniform_int_distribution<std::size_t> vertex(0, n - 1);
  for (std::size_t i = 0; i < agents; ++i) p.agents.push_back({vertex(rng), speed(rng)});
  p.source = vertex(rng);
  p.dest = vertex(rng);
  return p;
}

TEST(GraphDelivery, SingleAgentOnAnEdge) {
  GraphDeliveryProblem p;
  p.num_vertices = 2;
  p.edges = {{0, 1, 1.0}};
  p.agents = {{0, 2.0}};
  p.source = 0;
  p.dest = 1;
  const auto r = solve_graph_delivery(p);
  EXPECT_DOUBLE_EQ(r.time, 0.5);
  ASSERT_EQ(r.legs.size(), 1u);
  EXPECT_EQ(r.legs[0].agent, 0u);
  EXPECT_EQ(r.legs[0].pickup_vertex, 0u);
  EXPECT_EQ(r.legs[0].handover_vertex, 1u);
}

TEST(GraphDelivery, RelayBeatsBothSolos) {
  GraphDeliveryProblem p = path_s_a_d_x();
  p.agents = {{0, 1.0}, {3, 4.0}};
  const auto r = solve_graph_delivery(p);
  EXPECT_DOUBLE_EQ(r.time, 1.25);
  ASSERT_EQ(r.legs.size(), 2u);
  EXPECT_EQ(r.legs[0].agent, 0u);
  EXPECT_EQ(r.legs[0].handover_vertex, 1u);
  EXPECT_EQ(r.legs[1].agent, 1u);
  EXPECT_DOUBLE_EQ(r.legs[1].pickup_time, 1.0);
  EXPECT_DOUBLE_EQ(r.time, oracle::oracle_graph_delivery(p));
}

// The relay through m only ties the slow agent walking alone.
TEST(GraphDelivery, HalfWeightPathTiesTheSlowSolo) {
  GraphDeliveryProblem p;
  p.num_vertices = 4;
  p.edges = {{0, 1, 0.5}, {1, 2, 0.5}, {2, 3, 1.0}};
  p.agents = {{0, 1.0}, {3, 2.0}};
  p.source = 0;
  p.dest = 2;
  EXPECT_DOUBLE_EQ(solve_graph_delivery(p).time, 1.0);
  EXPECT_DOUBLE_EQ(oracle::oracle_graph_delivery(p), 1.0);
}

TEST(GraphDelivery, ReleaseDelayAddsLinearly) {
  GraphDeliveryProblem p = path_s_a_d_x();
  p.agents = {{3, 2.0}};
  p.release_time = {0.75};
  EXPECT_DOUBLE_EQ(solve_graph_delivery(p).time, 0.75 + (4.0 + 2.0) / 2.0);
}

TEST(GraphDelivery, SourceEqualsDestination) {
  GraphDeliveryProblem p = path_s_a_d_x();
  p.dest = 0;
  p.agents = {{3, 2.0}, {2, 1.0}};
  EXPECT_DOUBLE_EQ(solve_graph_delivery(p).time, 2.0);
}

TEST(GraphDelivery, Unreachable) {
  GraphDeliveryProblem p;
  p.num_vertices = 3;
  p.edges = {{0, 1, 1.0}};
  p.agents = {{0, 1.0}};
  p.source = 0;
  p.dest = 2;
  EXPECT_EQ(error_of([&] { solve_graph_delivery(p); }), ErrorCode::kUnreachable);
  p.agents = {{2, 1.0}};
  p.dest = 1;
  EXPECT_EQ(error_of([&] { solve_graph_delivery(p); }), ErrorCode::kUnreachable);
}

TEST(GraphDelivery, RejectsMalformedProblems) {
  GraphDeliveryProblem p = path_s_a_d_x();
  p.agents = {{0, 1.0}};
  p.edges.push_back({0, 3, 0.0});
  EXPECT_EQ(error_of([&] { solve_graph_delivery(p); }), ErrorCode::kInvalidInput);
  p = path_s_a_d_x();
  EXPECT_EQ(error_of([&] { solve_graph_delivery(p); }), ErrorCode::kInvalidInput);
  p.agents = {{9, 1.0}};
  EXPECT_EQ(error_of([&] { solve_graph_delivery(p); }), ErrorCode::kInvalidInput);
}

TEST(GraphDelivery, LegsChainTogether) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_problem(rng, 6, 3);
    const auto r = solve_graph_delivery(p);
    ASSERT_FALSE(r.legs.empty());
    EXPECT_EQ(r.legs.front().pickup_vertex, p.source);
    EXPECT_EQ(r.legs.back().handover_vertex, p.dest);
    EXPECT_DOUBLE_EQ(r.legs.back().handover_time, r.time);
    for (std::size_t j = 1; j < r.legs.size(); ++j) {
      EXPECT_EQ(r.legs[j].pickup_vertex, r.legs[j - 1].handover_vertex);
      EXPECT_GE(r.legs[j].pickup_time, r.legs[j - 1].handover_time);
      EXPECT_NE(r.legs[j].agent, r.legs[j - 1].agent);
    }
  }
}

TEST(GraphDelivery, AgreesWithOracleOnAllThreeVertexGraphs) {
  const double weights[] = {0.0, 1.0, 2.0};  // 0 = absent
  const double speeds[] = {1.0, 2.0, 4.0};
  int compared = 0;
  for (int w01 = 0; w01 < 3; ++w01)
    for (int w02 = 0; w02 < 3; ++w02)
      for (int w12 = 0; w12 < 3; ++w12) {
        GraphDeliveryProblem p;
        p.num_vertices = 3;
        if (w01) p.edges.push_back({0, 1, weights[w01]});
        if (w02) p.edges.push_back({0, 2, weights[w02]});
        if (w12) p.edges.push_back({1, 2, weights[w12]});
        p.source = 0;
        p.dest = 1;
        for (std::size_t a = 0; a < 9; ++a)
          for (std::size_t b = a; b < 9; ++b) {
            p.agents = {{a / 3, speeds[a % 3]}, {b / 3, speeds[b % 3]}};
            double want = -1, got = -1;
            try {
              want = oracle::oracle_graph_delivery(p);
            } catch (const PonyError&) {
            }
            try {
              got = solve_graph_delivery(p).time;
            } catch (const PonyError&) {
            }
            EXPECT_EQ(got, want);
            ++compared;
          }
      }
  EXPECT_EQ(compared, 27 * 45);
}

TEST(GraphDelivery, AgreesWithOracleOnRandomGraphs) {
  std::mt19937_64 rng(testing::kSeed);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_problem(rng, 6, 3);
    EXPECT_NEAR(solve_graph_delivery(p).time, oracle::oracle_graph_delivery(p), 1e-12);
  }
}

TEST(GraphDelivery, AddingAnAgentNeverHurts) {
  std::mt19937_64 rng(testing::kSeed + 5);
  std::uniform_real_distribution<double> speed(0.5, 4.0);
  for (int trial = 0; trial < 200; ++trial) {
    auto p = random_problem(rng, 12, 3);
    const double before = solve_graph_delivery(p).time;
    p.agents.push_back({static_cast<std::size_t>(trial % 12), speed(rng)});
    EXPECT_LE(solve_graph_delivery(p).time, before);
  }
}

}  // namespace
}  // namespace pony
