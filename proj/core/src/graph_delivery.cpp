#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "delivery_search.hpp"
#include "pony/error.hpp"
#include "pony/graph_delivery.hpp"
#include "pony/parallel.hpp"

namespace pony {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Csr {
  std::vector<std::size_t> offset;
  std::vector<std::pair<std::size_t, double>> adj;
};

Csr build_csr(const GraphDeliveryProblem& p) {
  Csr csr;
  csr.offset.assign(p.num_vertices + 1, 0);
  for (const auto& e : p.edges) {
    ++csr.offset[e.u + 1];
    ++csr.offset[e.v + 1];
  }
  for (std::size_t i = 0; i < p.num_vertices; ++i) csr.offset[i + 1] += csr.offset[i];
  csr.adj.resize(csr.offset.back());
  std::vector<std::size_t> fill(csr.offset.begin(), csr.offset.end() - 1);
  for (const auto& e : p.edges) {
    csr.adj[fill[e.u]++] = {e.v, e.weight};
    csr.adj[fill[e.v]++] = {e.u, e.weight};
  }
  return csr;
}

std::vector<double> shortest_distances(const Csr& csr, std::size_t from) {
  std::vector<double> dist(csr.offset.size() - 1, kInf);
  using Entry = std::pair<double, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;
  dist[from] = 0.0;
  open.push({0.0, from});
  while (!open.empty()) {
    auto [d, u] = open.top();
    open.pop();
    if (d > dist[u]) continue;
    for (std::size_t j = csr.offset[u]; j < csr.offset[u + 1]; ++j) {
      const auto [w, weight] = csr.adj[j];
      if (d + weight < dist[w]) {
        dist[w] = d + weight;
        open.push({dist[w], w});
      }
    }
  }
  return dist;
}

void check_problem(const GraphDeliveryProblem& p) {
  auto bad = [](const std::string& msg) { throw PonyError(ErrorCode::kInvalidInput, msg); };
  if (p.num_vertices == 0) bad("graph has no vertices");
  if (p.source >= p.num_vertices || p.dest >= p.num_vertices) bad("source or dest out of range");
  if (p.agents.empty()) bad("no agents");
  if (!p.release_time.empty() && p.release_time.size() != p.agents.size()) {
    bad("release_time must list one entry per agent");
  }
  for (const auto& e : p.edges) {
    if (e.u >= p.num_vertices || e.v >= p.num_vertices) bad("edge endpoint out of range");
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) bad("edge weights must be positive");
  }
  for (std::size_t i = 0; i < p.agents.size(); ++i) {
    const auto& a = p.agents[i];
    if (a.start >= p.num_vertices) bad("agent start out of range");
    if (!(a.speed > 0.0) || !std::isfinite(a.speed)) bad("agent speeds must be positive");
    if (!(p.release(i) >= 0.0)) bad("release times must be non-negative");
  }
}

class ExplicitTopology {
 public:
  ExplicitTopology(const GraphDeliveryProblem& p, const Csr& csr,
                   std::vector<std::vector<double>> dist)
      : p_(p), csr_(csr), dist_(std::move(dist)) {}

  std::size_t size() const { return p_.num_vertices; }
  std::size_t agents() const { return p_.agents.size(); }
  double speed(std::size_t i) const { return p_.agents[i].speed; }
  double available(std::size_t i, std::size_t u) const {
    return p_.release(i) + dist_[i][u] / p_.agents[i].speed;
  }
  double lower_bound(std::size_t) const { return 0.0; }

  template <class F>
  void for_each_neighbor(std::size_t u, F&& f) const {
    for (std::size_t j = csr_.offset[u]; j < csr_.offset[u + 1]; ++j) {
      f(csr_.adj[j].first, csr_.adj[j].second);
    }
  }

 private:
  const GraphDeliveryProblem& p_;
  const Csr& csr_;
  std::vector<std::vector<double>> dist_;
};

}  // namespace

GraphDeliveryResult solve_graph_delivery(const GraphDeliveryProblem& problem) {
  check_problem(problem);
  const Csr csr = build_csr(problem);
  std::vector<std::vector<double>> dist(problem.agents.size());
  parallel_for(problem.agents.size(), [&](std::size_t i) {
    dist[i] = shortest_distances(csr, problem.agents[i].start);
  });
  const ExplicitTopology topology(problem, csr, std::move(dist));
  return detail::delivery_search(topology, problem.source, problem.dest);
}

}  // namespace pony
