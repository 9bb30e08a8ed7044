#pragma once

// Time-label search shared by the explicit-graph solver and the grid solver.
//
// t(w) = min over agents i and neighbours u of max(t(u), T_i(u)) + w(u,w)/v_i,
// where T_i(u) is the earliest time agent i can stand at u. Labels only grow
// along edges, so a Dijkstra order (optionally with a consistent A* bound) is
// exact. Topology must provide:
//   std::size_t size() const;
//   std::size_t agents() const;
//   double speed(std::size_t i) const;
//   double available(std::size_t i, std::size_t u) const;   // T_i(u)
//   double lower_bound(std::size_t u) const;                // <= time to dest
//   template <class F> void for_each_neighbor(std::size_t u, F&& f) const;  // f(w, weight)

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "pony/error.hpp"
#include "pony/graph_delivery.hpp"

namespace pony::detail {

template <class Topology>
GraphDeliveryResult delivery_search(const Topology& g, std::size_t source, std::size_t dest) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr std::int32_t kNone = -1;
  const std::size_t n = g.size();
  const std::size_t k = g.agents();

  std::vector<double> label(n, kInf);
  std::vector<std::int32_t> pred(n, kNone);
  std::vector<std::int32_t> carrier(n, kNone);
  std::vector<char> closed(n, 0);

  std::int32_t first = kNone;
  double start_time = kInf;
  for (std::size_t i = 0; i < k; ++i) {
    const double t = g.available(i, source);
    if (t < start_time) {
      start_time = t;
      first = static_cast<std::int32_t>(i);
    }
  }
  if (first == kNone) {
    throw PonyError(ErrorCode::kUnreachable, "no agent can reach the source");
  }
  label[source] = start_time;
  carrier[source] = first;

  using Entry = std::pair<double, std::size_t>;  // (label + bound, vertex)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  open.push({start_time + g.lower_bound(source), source});

  while (!open.empty()) {
    const std::size_t u = open.top().second;
    open.pop();
    if (closed[u]) continue;
    closed[u] = 1;
    if (u == dest) break;
    const double tu = label[u];
    g.for_each_neighbor(u, [&](std::size_t w, double weight) {
      if (closed[w]) return;
      double best = label[w];
      std::int32_t best_agent = kNone;
      for (std::size_t i = 0; i < k; ++i) {
        const double depart = std::max(tu, g.available(i, u));
        const double t = depart + weight / g.speed(i);
        if (t < best) {
          best = t;
          best_agent = static_cast<std::int32_t>(i);
        }
      }
      if (best_agent != kNone) {
        label[w] = best;
        pred[w] = static_cast<std::int32_t>(u);
        carrier[w] = best_agent;
        open.push({best + g.lower_bound(w), w});
      }
    });
  }
  if (!std::isfinite(label[dest])) {
    throw PonyError(ErrorCode::kUnreachable, "the destination cannot be reached");
  }

  GraphDeliveryResult result;
  result.time = label[dest];
  if (dest == source) {
    const auto a = static_cast<std::size_t>(first);
    result.legs.push_back({a, source, source, start_time, start_time, {source}});
    return result;
  }

  // Walk back from dest; carrier[w] brought the message into w.
  std::vector<std::size_t> chain{dest};
  for (std::size_t w = dest; w != source;) {
    w = static_cast<std::size_t>(pred[w]);
    chain.push_back(w);
  }
  std::vector<std::size_t> path(chain.rbegin(), chain.rend());

  for (std::size_t j = 1; j < path.size(); ++j) {
    const auto agent = static_cast<std::size_t>(carrier[path[j]]);
    if (result.legs.empty() || result.legs.back().agent != agent) {
      const std::size_t at = path[j - 1];
      const double depart = std::max(label[at], g.available(agent, at));
      result.legs.push_back({agent, at, at, depart, depart, {at}});
    }
    GraphLeg& leg = result.legs.back();
    leg.path.push_back(path[j]);
    leg.handover_vertex = path[j];
    leg.handover_time = label[path[j]];
  }
  return result;
}

}  // namespace pony::detail
