#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pony/geometry.hpp"

namespace pony {

struct Robot {
  Point start;
  double speed = 1.0;

  friend bool operator==(const Robot&, const Robot&) = default;
};

struct Instance {
  Point source;
  Point destination;
  std::vector<Robot> robots;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Throws InvalidInput unless all coordinates are finite, there is at least
/// one robot and every speed is positive and finite.
void validate(const Instance& instance);

enum class EventKind { kPickup, kHandover, kDeliver };

std::string_view to_string(EventKind kind);
std::optional<EventKind> event_kind_from_string(std::string_view name);

struct PlanEvent {
  EventKind kind = EventKind::kPickup;
  double time = 0.0;
  Point location;
  std::optional<std::size_t> from_robot;
  std::optional<std::size_t> to_robot;

  friend bool operator==(const PlanEvent&, const PlanEvent&) = default;
};

struct Waypoint {
  double t = 0.0;
  Point p;

  friend bool operator==(const Waypoint&, const Waypoint&) = default;
};

/// Piecewise-linear path. The robot rests at the first waypoint before its
/// time and at the last waypoint after it.
using Trajectory = std::vector<Waypoint>;

struct DeliveryPlan {
  double total_time = 0.0;
  std::vector<PlanEvent> events;
  std::vector<Trajectory> trajectories;  // one per robot, instance order

  friend bool operator==(const DeliveryPlan&, const DeliveryPlan&) = default;
};

Point position_at(const Trajectory& trajectory, double t);

/// Appends a waypoint unless it repeats the last one exactly.
void append_waypoint(Trajectory& trajectory, double t, Point p);

/// Multiplies every time in the plan by `factor`.
void scale_time(DeliveryPlan& plan, double factor);

struct FeasibilityReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks speed limits on every trajectory segment, event ordering, that
/// events happen where the involved robots are, and that the message travels
/// from the source to the destination only through those co-locations.
FeasibilityReport check_feasibility(const DeliveryPlan& plan, const Instance& instance,
                                    double position_tol = 1e-7);

/// Straight-to-source-then-destination plan for one robot.
DeliveryPlan solo_plan(const Instance& instance, std::size_t robot);

double solo_time(const Robot& robot, Point source, Point destination);

}  // namespace pony
