#include "pony/plan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "pony/error.hpp"

namespace pony {

void validate(const Instance& instance) {
  if (!is_finite(instance.source) || !is_finite(instance.destination)) {
    throw PonyError(ErrorCode::kInvalidInput, "source and destination must be finite");
  }
  if (instance.robots.empty()) {
    throw PonyError(ErrorCode::kInvalidInput, "robots must be non-empty");
  }
  for (std::size_t i = 0; i < instance.robots.size(); ++i) {
    const Robot& r = instance.robots[i];
    if (!is_finite(r.start)) {
      throw PonyError(ErrorCode::kInvalidInput,
                      "robot " + std::to_string(i) + " has a non-finite position");
    }
    if (!(r.speed > 0.0) || !std::isfinite(r.speed)) {
      throw PonyError(ErrorCode::kInvalidInput,
                      "robot " + std::to_string(i) + " must have a positive finite speed");
    }
  }
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kPickup: return "pickup";
    case EventKind::kHandover: return "handover";
    case EventKind::kDeliver: return "deliver";
  }
  return "unknown";
}

std::optional<EventKind> event_kind_from_string(std::string_view name) {
  if (name == "pickup") return EventKind::kPickup;
  if (name == "handover") return EventKind::kHandover;
  if (name == "deliver") return EventKind::kDeliver;
  return std::nullopt;
}

Point position_at(const Trajectory& trajectory, double t) {
  if (trajectory.empty()) return {};
  if (t <= trajectory.front().t) return trajectory.front().p;
  if (t >= trajectory.back().t) return trajectory.back().p;
  auto it = std::upper_bound(trajectory.begin(), trajectory.end(), t,
                             [](double tt, const Waypoint& w) { return tt < w.t; });
  const Waypoint& b = *it;
  const Waypoint& a = *(it - 1);
  const double span = b.t - a.t;
  if (span <= 0.0) return b.p;
  const double s = (t - a.t) / span;
  return a.p + s * (b.p - a.p);
}

void append_waypoint(Trajectory& trajectory, double t, Point p) {
  if (!trajectory.empty() && trajectory.back().t == t && trajectory.back().p == p) return;
  trajectory.push_back({t, p});
}

void scale_time(DeliveryPlan& plan, double factor) {
  plan.total_time *= factor;
  for (auto& e : plan.events) e.time *= factor;
  for (auto& tr : plan.trajectories) {
    for (auto& w : tr) w.t *= factor;
  }
}

FeasibilityReport check_feasibility(const DeliveryPlan& plan, const Instance& instance,
                                    double position_tol) {
  FeasibilityReport report;
  auto fail = [&](const std::string& msg) { report.violations.push_back(msg); };

  if (plan.trajectories.size() != instance.robots.size()) {
    fail("trajectory count does not match robot count");
    return report;
  }
  for (std::size_t i = 0; i < plan.trajectories.size(); ++i) {
    const Trajectory& tr = plan.trajectories[i];
    const double speed = instance.robots[i].speed;
    if (tr.empty()) continue;
    if (distance(tr.front().p, instance.robots[i].start) > position_tol) {
      fail("robot " + std::to_string(i) + " does not start at its start point");
    }
    if (tr.front().t < 0.0) fail("robot " + std::to_string(i) + " moves before time 0");
    for (std::size_t j = 1; j < tr.size(); ++j) {
      const double dt = tr[j].t - tr[j - 1].t;
      const double d = distance(tr[j].p, tr[j - 1].p);
      if (dt < 0.0) {
        fail("robot " + std::to_string(i) + " waypoints out of order");
      } else if (d > speed * dt * (1.0 + 1e-9) + 1e-12) {
        std::ostringstream os;
        os << "robot " << i << " exceeds its speed on segment " << j << " (" << d
           << " in " << dt << ")";
        fail(os.str());
      }
    }
  }

  const double time_tol = 1e-9 * std::max(1.0, plan.total_time);
  for (std::size_t j = 1; j < plan.events.size(); ++j) {
    if (plan.events[j].time < plan.events[j - 1].time - time_tol) fail("events not sorted by time");
  }

  const auto n = instance.robots.size();
  std::vector<bool> holds(n, false);
  bool delivered = false;
  auto robot_at = [&](std::optional<std::size_t> r, const PlanEvent& e, const char* role) {
    if (!r || *r >= n) {
      fail(std::string("event without valid ") + role + " robot");
      return false;
    }
    const Point p = position_at(plan.trajectories[*r], e.time);
    if (distance(p, e.location) > position_tol) {
      std::ostringstream os;
      os << to_string(e.kind) << " at t=" << e.time << ": robot " << *r << " is "
         << distance(p, e.location) << " away";
      fail(os.str());
      return false;
    }
    return true;
  };

  for (const PlanEvent& e : plan.events) {
    switch (e.kind) {
      case EventKind::kPickup:
        if (distance(e.location, instance.source) > position_tol) fail("pickup away from source");
        if (robot_at(e.to_robot, e, "receiving")) holds[*e.to_robot] = true;
        break;
      case EventKind::kHandover:
        if (robot_at(e.from_robot, e, "giving") && robot_at(e.to_robot, e, "receiving")) {
          if (!holds[*e.from_robot]) fail("handover from a robot without the message");
          holds[*e.to_robot] = true;
        }
        break;
      case EventKind::kDeliver:
        if (distance(e.location, instance.destination) > position_tol) {
          fail("delivery away from destination");
        }
        if (robot_at(e.from_robot, e, "delivering")) {
          if (!holds[*e.from_robot]) fail("delivery by a robot without the message");
          if (std::abs(e.time - plan.total_time) > time_tol) {
            fail("delivery time differs from total_time");
          }
          delivered = true;
        }
        break;
    }
  }
  if (!delivered) fail("message never delivered");
  return report;
}

double solo_time(const Robot& robot, Point source, Point destination) {
  return (distance(robot.start, source) + distance(source, destination)) / robot.speed;
}

DeliveryPlan solo_plan(const Instance& instance, std::size_t robot) {
  DeliveryPlan plan;
  plan.trajectories.resize(instance.robots.size());
  for (std::size_t i = 0; i < instance.robots.size(); ++i) {
    plan.trajectories[i].push_back({0.0, instance.robots[i].start});
  }
  const Robot& r = instance.robots.at(robot);
  const double t_source = distance(r.start, instance.source) / r.speed;
  const double t_total = solo_time(r, instance.source, instance.destination);
  Trajectory& tr = plan.trajectories[robot];
  append_waypoint(tr, t_source, instance.source);
  append_waypoint(tr, t_total, instance.destination);
  plan.total_time = t_total;
  plan.events.push_back({EventKind::kPickup, t_source, instance.source, std::nullopt, robot});
  plan.events.push_back({EventKind::kDeliver, t_total, instance.destination, robot, std::nullopt});
  return plan;
}

}  // namespace pony
