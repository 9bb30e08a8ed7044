#include "pony/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "pony/error.hpp"
#include "pony/numeric.hpp"
#include "pony/parallel.hpp"

namespace pony::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::size_t kZoomPoints = 101;

struct Best {
  double value = kInf;
  std::size_t i = 0, j = 0;
};

// Minimum of f over an (n+1) x (n+1) lattice on [x0, x0+w] x [y0, y0+w].
template <class F>
Best lattice_min(F&& f, double x0, double y0, double w, std::size_t n) {
  const double h = w / static_cast<double>(n);
  std::vector<Best> rows(n + 1);
  parallel_for(n + 1, [&](std::size_t i) {
    Best b;
    const double x = x0 + h * static_cast<double>(i);
    for (std::size_t j = 0; j <= n; ++j) {
      const double val = f(x, y0 + h * static_cast<double>(j));
      if (val < b.value) b = {val, i, j};
    }
    if (b.value == kInf) b.i = i;
    rows[i] = b;
  });
  Best best = rows.front();
  for (const Best& b : rows) {
    if (b.value < best.value) best = b;
  }
  return best;
}

}  // namespace

double oracle_two_robot(Point l, Point k, Point s, Point d, double v, const OracleConfig& config) {
  if (config.grid_resolution < 100 || config.bounding_inflation < 0.25 ||
      config.refine_iterations < 0) {
    throw PonyError(ErrorCode::kInvalidInput, "oracle configuration out of range");
  }
  if (!(v > 0.0)) throw PonyError(ErrorCode::kInvalidInput, "oracle needs a positive speed");

  const double a = distance(l, s);
  const double sd = distance(s, d);
  const double solo = std::min(a + sd, (distance(k, s) + sd) / v);

  auto objective = [&](double x, double y) {
    const double sm = std::sqrt((x - s.x) * (x - s.x) + (y - s.y) * (y - s.y));
    const double km = std::sqrt((x - k.x) * (x - k.x) + (y - k.y) * (y - k.y));
    const double md = std::sqrt((x - d.x) * (x - d.x) + (y - d.y) * (y - d.y));
    return std::max(a + sm, km / v) + md / v;
  };

  double x_lo = std::min({l.x, k.x, s.x, d.x}), x_hi = std::max({l.x, k.x, s.x, d.x});
  double y_lo = std::min({l.y, k.y, s.y, d.y}), y_hi = std::max({l.y, k.y, s.y, d.y});
  const double size = std::max({x_hi - x_lo, y_hi - y_lo, 1e-9});
  const double w = size * (1.0 + 2.0 * config.bounding_inflation);
  const double cx = 0.5 * (x_lo + x_hi);
  const double cy = 0.5 * (y_lo + y_hi);

  const std::size_t n = config.grid_resolution;
  double x0 = cx - 0.5 * w, y0 = cy - 0.5 * w, span = w;
  Best b = lattice_min(objective, x0, y0, span, n);
  double best = b.value;
  double h = span / static_cast<double>(n);
  double bx = x0 + h * static_cast<double>(b.i), by = y0 + h * static_cast<double>(b.j);

  // Each round covers +-5 incumbent cells with a grid 10x finer.
  double half = 5.0 * h;
  for (int round = 0; round < config.refine_iterations; ++round) {
    x0 = bx - half;
    y0 = by - half;
    span = 2.0 * half;
    b = lattice_min(objective, x0, y0, span, kZoomPoints - 1);
    if (b.value < best) {
      best = b.value;
      h = span / static_cast<double>(kZoomPoints - 1);
      bx = x0 + h * static_cast<double>(b.i);
      by = y0 + h * static_cast<double>(b.j);
    }
    half /= 10.0;
  }

  // The objective is convex in M (a max of norms plus a norm), so nested
  // golden sections over the whole box converge to the global minimum even
  // where the zoom stalls along the kink between the two arrival times.
  const double box_x = cx - 0.5 * w, box_y = cy - 0.5 * w;
  const double tol = 1e-12 * w;
  auto column_min = [&](double x) {
    return numeric::golden_minimize([&](double y) { return objective(x, y); }, box_y,
                                    box_y + w, tol)
        .value;
  };
  best = std::min(best, numeric::golden_minimize(column_min, box_x, box_x + w, tol).value);
  return std::min(best, solo);
}

double oracle_two_robot(const Instance& instance, const OracleConfig& config) {
  validate(instance);
  if (instance.robots.size() != 2) {
    throw PonyError(ErrorCode::kInvalidInput, "oracle needs exactly 2 robots");
  }
  const auto& r = instance.robots;
  const std::size_t slow = r[1].speed < r[0].speed ? 1 : 0;
  const double u = r[slow].speed;
  const double v = r[1 - slow].speed / u;
  return oracle_two_robot(r[slow].start, r[1 - slow].start, instance.source,
                          instance.destination, v, config) /
         u;
}

double oracle_graph_delivery(const GraphDeliveryProblem& p) {
  const std::size_t n = p.num_vertices;
  const std::size_t k = p.agents.size();
  if (n > kGraphOracleMaxVertices || k > kGraphOracleMaxAgents) {
    throw PonyError(ErrorCode::kTooLarge, "graph oracle is limited to 6 vertices and 3 agents");
  }
  if (n == 0 || k == 0 || p.source >= n || p.dest >= n) {
    throw PonyError(ErrorCode::kInvalidInput, "malformed graph problem");
  }

  std::vector<std::vector<double>> dist(n, std::vector<double>(n, kInf));
  for (std::size_t i = 0; i < n; ++i) dist[i][i] = 0.0;
  for (const auto& e : p.edges) {
    dist[e.u][e.v] = std::min(dist[e.u][e.v], e.weight);
    dist[e.v][e.u] = std::min(dist[e.v][e.u], e.weight);
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        dist[i][j] = std::min(dist[i][j], dist[i][m] + dist[m][j]);

  auto avail = [&](std::size_t agent, std::size_t u) {
    return p.release(agent) + dist[p.agents[agent].start][u] / p.agents[agent].speed;
  };

  double best = kInf;
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;

  for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::size_t{1} << i)) chosen.push_back(i);
    do {
      const std::size_t m = chosen.size();
      // Handover vertices h_1 .. h_{m-1} enumerated as a base-n counter.
      std::size_t combos = 1;
      for (std::size_t j = 1; j < m; ++j) combos *= n;
      std::vector<std::size_t> stops(m + 1);
      for (std::size_t c = 0; c < combos; ++c) {
        stops.front() = p.source;
        stops.back() = p.dest;
        std::size_t code = c;
        for (std::size_t j = 1; j < m; ++j) {
          stops[j] = code % n;
          code /= n;
        }
        double t = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
          const std::size_t agent = chosen[j];
          const double depart = std::max(t, avail(agent, stops[j]));
          t = depart + dist[stops[j]][stops[j + 1]] / p.agents[agent].speed;
        }
        best = std::min(best, t);
      }
    } while (std::next_permutation(chosen.begin(), chosen.end()));
  }
  if (!std::isfinite(best)) {
    throw PonyError(ErrorCode::kUnreachable, "no relay delivers the message");
  }
  return best;
}

Point oracle_circle_minimizer(const Circle& circle, Point k, Point d, std::size_t samples) {
  auto f = [&](double theta) {
    const Point m = circle.at(theta);
    return distance(k, m) + distance(m, d);
  };
  const double step = 2.0 * std::numbers::pi / static_cast<double>(samples);
  std::size_t best = 0;
  double best_value = kInf;
  for (std::size_t i = 0; i < samples; ++i) {
    const double val = f(step * static_cast<double>(i));
    if (val < best_value) {
      best_value = val;
      best = i;
    }
  }
  const double c = step * static_cast<double>(best);
  const auto refined = numeric::golden_minimize(f, c - step, c + step, 1e-14);
  return circle.at(refined.value < best_value ? refined.x : c);
}

}  // namespace pony::oracle
