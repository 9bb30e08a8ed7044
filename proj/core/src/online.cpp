#include "pony/online.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "pony/error.hpp"
#include "pony/offline_two.hpp"

namespace pony {

OnlineOutcome run_online(const Instance& instance) {
  validate(instance);
  OnlineOutcome out;
  out.per_robot_solo_time.reserve(instance.robots.size());
  for (const Robot& r : instance.robots) {
    out.per_robot_solo_time.push_back(solo_time(r, instance.source, instance.destination));
  }
  out.delivery_time = out.per_robot_solo_time.front();
  for (std::size_t i = 1; i < out.per_robot_solo_time.size(); ++i) {
    if (out.per_robot_solo_time[i] < out.delivery_time) {
      out.delivery_time = out.per_robot_solo_time[i];
      out.winning_robot = i;
    }
  }
  return out;
}

DeliveryPlan online_plan(const Instance& instance) {
  return solo_plan(instance, run_online(instance).winning_robot);
}

double competitive_ratio_two(const Instance& instance) {
  const double online = run_online(instance).delivery_time;
  // The race is itself an offline plan; the cap absorbs round-off from the
  // solver's speed normalization.
  const double offline = std::min(solve_two(instance).plan.total_time, online);
  if (offline <= 0.0) return 1.0;
  return online / offline;
}

double relay_ratio_closed_form(int n) {
  return 2.0 - 2.0 / (std::ldexp(1.0, n) - 1.0);
}

RelayConstruction build_relay_construction(int n) {
  if (n < 3 || n > 60) {
    throw PonyError(ErrorCode::kInvalidN, "relay construction needs 3 <= n <= 60, got " +
                                              std::to_string(n));
  }
  RelayConstruction rc;
  rc.n = n;
  const double two_n = std::ldexp(1.0, n);
  for (int i = 0; i + 1 < n; ++i) {
    rc.meeting_points.push_back(1.0 - (std::ldexp(1.0, i + 1) - 1.0) / (two_n - 1.0));
  }
  rc.speeds.push_back(1.0);
  for (int i = 0; i + 1 < n; ++i) {
    const double shrink =
        1.0 - std::ldexp(1.0, i + 2) / (2.0 * two_n - std::ldexp(1.0, i + 1) - 3.0);
    rc.speeds.push_back(rc.speeds.back() * shrink);
  }
  for (double v : rc.speeds) rc.positions.push_back(4.0 * v - 1.0);

  rc.instance.source = {0.0, 0.0};
  rc.instance.destination = {1.0, 0.0};
  for (int i = 0; i < n; ++i) rc.instance.robots.push_back({{rc.positions[i], 0.0}, rc.speeds[i]});
  rc.online_time = run_online(rc.instance).delivery_time;
  rc.relay_time = 2.0 + 2.0 / (two_n - 1.0);

  // Prescribed relay: r_{n-1} fetches the message at S and carries it to
  // m_{n-2}; every other r_i walks to m_i, waits, and carries on to m_{i-1}
  // (r_0 to D).
  DeliveryPlan& plan = rc.relay_plan;
  plan.trajectories.resize(n);
  for (int i = 0; i < n; ++i) append_waypoint(plan.trajectories[i], 0.0, rc.instance.robots[i].start);

  auto at = [](double x) { return Point{x, 0.0}; };
  std::size_t carrier = static_cast<std::size_t>(n - 1);
  double x = 0.0;
  double t = std::abs(rc.positions[carrier]) / rc.speeds[carrier];
  append_waypoint(plan.trajectories[carrier], t, at(0.0));
  plan.events.push_back({EventKind::kPickup, t, at(0.0), std::nullopt, carrier});
  for (int i = n - 2; i >= 0; --i) {
    const auto next = static_cast<std::size_t>(i);
    const double m = rc.meeting_points[next];
    const double carrier_there = t + std::abs(m - x) / rc.speeds[carrier];
    const double next_there = std::abs(rc.positions[next] - m) / rc.speeds[next];
    const double meet = std::max(carrier_there, next_there);
    append_waypoint(plan.trajectories[carrier], carrier_there, at(m));
    append_waypoint(plan.trajectories[carrier], meet, at(m));
    append_waypoint(plan.trajectories[next], next_there, at(m));
    append_waypoint(plan.trajectories[next], meet, at(m));
    plan.events.push_back({EventKind::kHandover, meet, at(m), carrier, next});
    carrier = next;
    x = m;
    t = meet;
  }
  t += (1.0 - x) / rc.speeds[carrier];
  append_waypoint(plan.trajectories[carrier], t, at(1.0));
  plan.events.push_back({EventKind::kDeliver, t, at(1.0), carrier, std::nullopt});
  plan.total_time = t;
  rc.simulated_time = t;
  return rc;
}

}  // namespace pony
