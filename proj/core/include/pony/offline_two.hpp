#pragma once

#include <optional>

#include "pony/geometry.hpp"
#include "pony/plan.hpp"

namespace pony {

enum class TwoRobotCase { kFastSolo, kSlowSolo, kHandover };

const char* to_string(TwoRobotCase c);

// In plans produced by solve_two_at_source and solve_two_general, robot 0 is
// the slow robot (speed 1) and robot 1 the fast one (speed v). solve_two
// maps them back to instance order.
struct TwoRobotSolution {
  DeliveryPlan plan;
  TwoRobotCase kind = TwoRobotCase::kSlowSolo;
  std::optional<Point> meeting_point;  // M
  std::optional<Point> detour_point;   // Q, general solver only
  std::optional<Angle> alpha;          // polar angle of M about the circle center, K on the 0 axis
  std::optional<Angle> beta;           // angle SKD (at source) or detour direction (general)
};

/// Optimal plan when the slow robot (speed 1) starts at S and the fast robot
/// (speed v > 1) starts at K.
TwoRobotSolution solve_two_at_source(Point k, Point s, Point d, double v);

/// Optimal plan for a slow robot (speed 1) at L and a fast robot (speed v)
/// at K.
TwoRobotSolution solve_two_general(Point l, Point k, Point s, Point d, double v);

/// Two-robot instance with arbitrary positive speeds. Speeds are normalized so
/// the slower robot has speed 1; equal speeds yield the better solo plan.
/// Throws InvalidInput unless the instance has exactly two robots.
TwoRobotSolution solve_two(const Instance& instance);

/// Residual of the simultaneous-arrival condition for a meeting point M, with
/// a = |LS| > 0. Vanishes exactly when a + |SM| = |KM| / v. Homogeneous of
/// degree 2 in the coordinates. Throws DegenerateInstance when a = 0.
double optimal_time_constraint_residual(Point m, Point l, Point k, Point s, double v);

}  // namespace pony
