#pragma once

#include <cstddef>

#include "pony/geometry.hpp"
#include "pony/graph_delivery.hpp"
#include "pony/plan.hpp"

namespace pony::oracle {

struct OracleConfig {
  std::size_t grid_resolution = 1500;  // cells per axis, >= 100
  int refine_iterations = 6;           // 10x zoom rounds around the incumbent
  double bounding_inflation = 0.5;     // margin as a fraction of the box size, >= 0.25
};

/// Brute-force two-robot optimum for a slow robot (speed 1) at L and a fast
/// robot (speed v) at K: minimum over grid meeting points M of
/// max(|LS| + |SM|, |KM| / v) + |MD| / v and both solo times.
double oracle_two_robot(Point l, Point k, Point s, Point d, double v,
                        const OracleConfig& config = {});

/// Same for a two-robot instance with arbitrary speeds (equal speeds allowed).
double oracle_two_robot(const Instance& instance, const OracleConfig& config = {});

inline constexpr std::size_t kGraphOracleMaxVertices = 6;
inline constexpr std::size_t kGraphOracleMaxAgents = 3;

/// Exhaustive relay enumeration: every ordered sequence of distinct agents
/// and every choice of handover vertices, timed with waiting. Throws
/// TooLarge beyond the caps above and Unreachable when nothing delivers.
double oracle_graph_delivery(const GraphDeliveryProblem& problem);

/// Point of `circle` minimizing |KP| + |PD| over `samples` uniform angles,
/// followed by local refinement between the neighbours of the best sample.
Point oracle_circle_minimizer(const Circle& circle, Point k, Point d, std::size_t samples);

}  // namespace pony::oracle
