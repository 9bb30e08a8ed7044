#include "pony/offline_multi.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>

#include "delivery_search.hpp"
#include "pony/error.hpp"

namespace pony {

namespace {

constexpr double kSnapTieTolerance = 1e-12;

struct Bounds {
  long ix_min = 0, ix_max = 0, iy_min = 0, iy_max = 0;
  long side() const { return std::max(ix_max - ix_min, iy_max - iy_min); }
};

struct Layout {
  double epsilon = 0.0;
  long k = 0;  // lattice index of D
  Bounds bounds;
};

// Lattice for a normalized overhead; `frame` holds the robot starts in the
// grid frame.
Layout layout_for(double sd, std::size_t n, double eps_norm, const std::vector<Point>& frame) {
  Layout out;
  const double cells = std::ceil(static_cast<double>(n) * sd / eps_norm);
  if (!(cells <= 1e9)) {
    out.k = std::numeric_limits<long>::max() / 4;
    out.bounds.ix_max = out.k;
    return out;
  }
  out.k = std::max(1L, static_cast<long>(cells));
  out.epsilon = sd / static_cast<double>(out.k);
  Bounds& b = out.bounds;
  b.ix_max = out.k;
  for (Point p : frame) {
    const double fx = p.x / out.epsilon;
    const double fy = p.y / out.epsilon;
    b.ix_min = std::min(b.ix_min, static_cast<long>(std::floor(fx)));
    b.ix_max = std::max(b.ix_max, static_cast<long>(std::ceil(fx)));
    b.iy_min = std::min(b.iy_min, static_cast<long>(std::floor(fy)));
    b.iy_max = std::max(b.iy_max, static_cast<long>(std::ceil(fy)));
  }
  return out;
}

long snap_index(double f) {
  const double lower = std::floor(f);
  return f - lower > 0.5 + kSnapTieTolerance ? static_cast<long>(lower) + 1
                                             : static_cast<long>(lower);
}

class GridTopology {
 public:
  explicit GridTopology(const GridModel& g) : g_(g) {
    v_max_ = *std::max_element(g.speeds.begin(), g.speeds.end());
  }

  std::size_t size() const { return g_.cols * g_.rows; }
  std::size_t agents() const { return g_.speeds.size(); }
  double speed(std::size_t i) const { return g_.speeds[i]; }
  double available(std::size_t i, std::size_t u) const {
    return g_.release_time + g_.epsilon * steps(u, g_.snapped_starts[i]) / g_.speeds[i];
  }
  double lower_bound(std::size_t u) const {
    return g_.epsilon * steps(u, g_.dest_vertex) / v_max_;
  }

  template <class F>
  void for_each_neighbor(std::size_t u, F&& f) const {
    const std::size_t c = g_.col_of(u);
    const std::size_t r = g_.row_of(u);
    if (c > 0) f(u - 1, g_.epsilon);
    if (c + 1 < g_.cols) f(u + 1, g_.epsilon);
    if (r > 0) f(u - g_.cols, g_.epsilon);
    if (r + 1 < g_.rows) f(u + g_.cols, g_.epsilon);
  }

 private:
  double steps(std::size_t a, std::size_t b) const {
    const auto dc = static_cast<long>(g_.col_of(a)) - static_cast<long>(g_.col_of(b));
    const auto dr = static_cast<long>(g_.row_of(a)) - static_cast<long>(g_.row_of(b));
    return static_cast<double>(std::labs(dc) + std::labs(dr));
  }

  const GridModel& g_;
  double v_max_ = 1.0;
};

// Builds trajectories in the grid frame with normalized times.
class PlanBuilder {
 public:
  PlanBuilder(const GridModel& g, const Instance& inst) : g_(g) {
    const std::size_t n = inst.robots.size();
    plan_.trajectories.resize(n);
    at_.resize(n);
    free_at_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      Trajectory& tr = plan_.trajectories[i];
      append_waypoint(tr, 0.0, g.to_frame(inst.robots[i].start));
      append_waypoint(tr, g.snap_time[i], g.frame_point(g.snapped_starts[i]));
      append_waypoint(tr, g.release_time, g.frame_point(g.snapped_starts[i]));
      at_[i] = g.snapped_starts[i];
      free_at_[i] = g.release_time;
    }
  }

  void add_leg(const GraphLeg& leg) {
    const std::size_t a = leg.agent;
    Trajectory& tr = plan_.trajectories[a];
    // Approach along an L-path: first along the grid x axis, then along y.
    const std::size_t corner = g_.vertex(g_.col_of(leg.pickup_vertex), g_.row_of(at_[a]));
    double t = free_at_[a];
    t += g_.epsilon * span(at_[a], corner) / g_.speeds[a];
    append_waypoint(tr, std::min(t, leg.pickup_time), g_.frame_point(corner));
    t += g_.epsilon * span(corner, leg.pickup_vertex) / g_.speeds[a];
    append_waypoint(tr, std::min(t, leg.pickup_time), g_.frame_point(leg.pickup_vertex));
    append_waypoint(tr, leg.pickup_time, g_.frame_point(leg.pickup_vertex));

    // Carry along the path, keeping only the turning vertices.
    double travelled = 0.0;
    for (std::size_t j = 1; j < leg.path.size(); ++j) {
      travelled += g_.epsilon;
      const bool last = j + 1 == leg.path.size();
      if (last || !straight(leg.path[j - 1], leg.path[j], leg.path[j + 1])) {
        const double when = last ? leg.handover_time
                                 : leg.pickup_time + travelled / g_.speeds[a];
        append_waypoint(tr, when, g_.frame_point(leg.path[j]));
      }
    }
    at_[a] = leg.handover_vertex;
    free_at_[a] = leg.handover_time;
  }

  // The giver stays put until the receiver takes the message.
  void hold(std::size_t agent, double until) {
    append_waypoint(plan_.trajectories[agent], until, g_.frame_point(at_[agent]));
    free_at_[agent] = until;
  }

  DeliveryPlan finish(const GraphDeliveryResult& phase2) {
    const auto& legs = phase2.legs;
    plan_.events.push_back({EventKind::kPickup, legs.front().pickup_time,
                            g_.frame_point(g_.source_vertex), std::nullopt, legs.front().agent});
    for (std::size_t j = 1; j < legs.size(); ++j) {
      plan_.events.push_back({EventKind::kHandover, legs[j].pickup_time,
                              g_.frame_point(legs[j].pickup_vertex), legs[j - 1].agent,
                              legs[j].agent});
    }
    plan_.events.push_back({EventKind::kDeliver, phase2.time, g_.frame_point(g_.dest_vertex),
                            legs.back().agent, std::nullopt});
    plan_.total_time = phase2.time;

    // Back to world coordinates and real time.
    const double to_real = 1.0 / g_.speed_scale;
    for (auto& tr : plan_.trajectories) {
      for (auto& w : tr) w.p = g_.to_world(w.p);
    }
    for (auto& e : plan_.events) e.location = g_.to_world(e.location);
    scale_time(plan_, to_real);
    return std::move(plan_);
  }

 private:
  double span(std::size_t a, std::size_t b) const {
    const auto dc = static_cast<long>(g_.col_of(a)) - static_cast<long>(g_.col_of(b));
    const auto dr = static_cast<long>(g_.row_of(a)) - static_cast<long>(g_.row_of(b));
    return static_cast<double>(std::labs(dc) + std::labs(dr));
  }

  bool straight(std::size_t a, std::size_t b, std::size_t c) const {
    return b - a == c - b || a - b == b - c;
  }

  const GridModel& g_;
  DeliveryPlan plan_;
  std::vector<std::size_t> at_;
  std::vector<double> free_at_;
};

}  // namespace

RectilinearLegs rectilinear_detour_bound(Point a, Point p) {
  return {std::abs(p.x - a.x), std::abs(p.y - a.y)};
}

Point GridModel::frame_point(std::size_t v) const {
  return {static_cast<double>(static_cast<long>(col_of(v)) + col_offset) * epsilon,
          static_cast<double>(static_cast<long>(row_of(v)) + row_offset) * epsilon};
}

Point GridModel::world_point(std::size_t v) const { return to_world(frame_point(v)); }

Point GridModel::to_frame(Point world) const {
  return rotate_about(world - anchor, Point{}, Angle{-angle});
}

Point GridModel::to_world(Point frame) const {
  return anchor + rotate_about(frame, Point{}, Angle{angle});
}

GridModel build_grid(const Instance& instance, double eps_prime) {
  validate(instance);
  if (!(eps_prime > 0.0) || !std::isfinite(eps_prime)) {
    throw PonyError(ErrorCode::kInvalidInput, "eps_prime must be positive");
  }
  const Point s = instance.source;
  const Point d = instance.destination;
  if (nearly_equal(s, d)) {
    throw PonyError(ErrorCode::kDegenerateInstance, "source and destination coincide");
  }

  GridModel g;
  const std::size_t n = instance.robots.size();
  g.anchor = s;
  g.angle = std::atan2(d.y - s.y, d.x - s.x);
  g.speed_scale = instance.robots.front().speed;
  for (const Robot& r : instance.robots) g.speed_scale = std::min(g.speed_scale, r.speed);

  std::vector<Point> frame;
  frame.reserve(n);
  for (const Robot& r : instance.robots) frame.push_back(g.to_frame(r.start));

  const double sd = distance(s, d);
  const double eps_norm = eps_prime * g.speed_scale;
  const Layout layout = layout_for(sd, n, eps_norm, frame);
  if (layout.bounds.side() > static_cast<long>(kMaxGridSide)) {
    double x_lo = 0.0, x_hi = sd, y_lo = 0.0, y_hi = 0.0;
    for (Point p : frame) {
      x_lo = std::min(x_lo, p.x);
      x_hi = std::max(x_hi, p.x);
      y_lo = std::min(y_lo, p.y);
      y_hi = std::max(y_hi, p.y);
    }
    const double extent = std::max(x_hi - x_lo, y_hi - y_lo);
    double candidate = static_cast<double>(n) * extent / static_cast<double>(kMaxGridSide);
    while (layout_for(sd, n, candidate, frame).bounds.side() > static_cast<long>(kMaxGridSide)) {
      candidate *= 1.01;
    }
    const double min_eps_prime = candidate / g.speed_scale;
    std::ostringstream os;
    os << "grid would need " << layout.bounds.side() << " cells per side (limit "
       << kMaxGridSide << "); use eps_prime >= " << min_eps_prime;
    throw GridTooLargeError(os.str(), min_eps_prime);
  }

  const Bounds& b = layout.bounds;
  g.epsilon = layout.epsilon;
  g.cols = g.rows = static_cast<std::size_t>(b.side()) + 1;
  g.delta = static_cast<double>(b.side()) * g.epsilon;
  g.col_offset = b.ix_min;
  g.row_offset = b.iy_min;
  auto lattice = [&](long ix, long iy) {
    return g.vertex(static_cast<std::size_t>(ix - b.ix_min), static_cast<std::size_t>(iy - b.iy_min));
  };
  g.source_vertex = lattice(0, 0);
  g.dest_vertex = lattice(layout.k, 0);
  g.origin = g.world_point(g.vertex(0, 0));

  g.speeds.resize(n);
  g.snapped_starts.resize(n);
  g.snap_time.resize(n);
  g.snap_wait.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.speeds[i] = instance.robots[i].speed / g.speed_scale;
    const std::size_t v =
        lattice(snap_index(frame[i].x / g.epsilon), snap_index(frame[i].y / g.epsilon));
    g.snapped_starts[i] = v;
    g.snap_time[i] = distance(frame[i], g.frame_point(v)) / g.speeds[i];
    g.release_time = std::max(g.release_time, g.snap_time[i]);
  }
  for (std::size_t i = 0; i < n; ++i) g.snap_wait[i] = g.release_time - g.snap_time[i];
  return g;
}

MultiRobotSolution solve_multi_detailed(const Instance& instance, double eps_prime) {
  MultiRobotSolution out;
  out.grid = build_grid(instance, eps_prime);
  const GridTopology topology(out.grid);
  out.phase2 = detail::delivery_search(topology, out.grid.source_vertex, out.grid.dest_vertex);

  PlanBuilder builder(out.grid, instance);
  const auto& legs = out.phase2.legs;
  for (std::size_t j = 0; j < legs.size(); ++j) {
    builder.add_leg(legs[j]);
    if (j + 1 < legs.size()) builder.hold(legs[j].agent, legs[j + 1].pickup_time);
  }
  out.plan = builder.finish(out.phase2);
  return out;
}

DeliveryPlan solve_multi(const Instance& instance, double eps_prime) {
  return solve_multi_detailed(instance, eps_prime).plan;
}

}  // namespace pony
