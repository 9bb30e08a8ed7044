#pragma once

#include <cstddef>
#include <vector>

namespace pony {

struct GraphEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  double weight = 1.0;
};

struct GraphAgent {
  std::size_t start = 0;
  double speed = 1.0;
};

struct GraphDeliveryProblem {
  std::size_t num_vertices = 0;
  std::vector<GraphEdge> edges;  // undirected
  std::vector<GraphAgent> agents;
  std::size_t source = 0;
  std::size_t dest = 0;
  // Per agent; empty means every agent may move at time 0.
  std::vector<double> release_time;

  double release(std::size_t agent) const {
    return release_time.empty() ? 0.0 : release_time[agent];
  }
};

/// One carrier's stretch: the agent picks the message up at `pickup_vertex`
/// at `pickup_time` and carries it without stopping along `path` to
/// `handover_vertex`, arriving at `handover_time`.
struct GraphLeg {
  std::size_t agent = 0;
  std::size_t pickup_vertex = 0;
  std::size_t handover_vertex = 0;
  double pickup_time = 0.0;
  double handover_time = 0.0;
  std::vector<std::size_t> path;  // pickup_vertex ... handover_vertex
};

struct GraphDeliveryResult {
  double time = 0.0;
  std::vector<GraphLeg> legs;
};

/// Earliest delivery time from source to dest. Agents travel shortest paths
/// at their speed after their release time; the message changes hands only
/// where carrier and receiver meet, the earlier one waiting.
/// Throws InvalidInput for malformed problems and Unreachable when no agent
/// can bring the message from the source to the destination.
GraphDeliveryResult solve_graph_delivery(const GraphDeliveryProblem& problem);

}  // namespace pony
