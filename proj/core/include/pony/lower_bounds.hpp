#pragma once

#include <cstddef>

#include "pony/geometry.hpp"

namespace pony {

// Speed-unknown adversary. Frame: Apollonius center C at the origin,
// K = (v^2/(v^2-1), 0), S = (1/(v^2-1), 0), M at radius v/(v^2-1) and angle
// alpha, D at radius v^2/(v^2-1) and angle 2 alpha, X on the circle at angle
// beta (where the online robot chooses to meet).
struct AdversaryConfig {
  double v = 1.5;
  Angle alpha;
  Angle beta;
};

struct SpeedRatios {
  double speed1 = 1.0;  // slow robot has speed 1
  double speed0 = 1.0;  // slow robot does not move
  double worst() const { return speed1 > speed0 ? speed1 : speed0; }
};

SpeedRatios lb_speed_ratio(const AdversaryConfig& config);

/// Adversary placements (v, alpha) admitted by the sweep: the slow robot
/// cannot beat the fast one alone (v |SD| > 1 + |SD|), and the handover
/// through M is no slower than the slow robot walking (2 |KM| / v <= |SD|).
bool lb_speed_admissible(double v, double alpha);

struct SpeedBound {
  double bound = 0.0;
  AdversaryConfig argmax;
};

struct SpeedSearchOptions {
  std::size_t grid_v = 256;
  std::size_t grid_alpha = 256;
  std::size_t grid_beta = 256;
  double v_min = 1.0;  // exclusive
  double v_max = 2.0;
  bool refine = true;
};

/// max over admissible (v, alpha) of min over beta in [0, pi/2] of the worse
/// of the two ratios. Grid scan, then golden refinement around the best cell.
SpeedBound lb_speed_search(const SpeedSearchOptions& options);
SpeedBound lb_speed_search(std::size_t grid_v, std::size_t grid_alpha, std::size_t grid_beta);

// Position-unknown adversary: S at the origin, D on the positive x axis.
// C1 is the Apollonius center of the fast robot K1 (|SK1| = 1), M1 the
// meeting point at angle alpha about C1, X the point of the circle on line SD
// toward D, X1 the foot of the perpendicular from C1 to SD. The mirror
// image of the figure across SD carries the second candidate K2.
struct PositionGeometry {
  Point s, d, c1, k1, m1, x, x1;
  Point c2, k2, m2;
  double radius = 0.0;  // |C1X|
};

/// Throws GeometryInfeasible if a square-root argument is below -1e-12.
PositionGeometry lb_position_geometry(double v, double alpha);

/// (|SX| (v - 1) + |SD|) / (2 |K1M1|), distances by law of cosines.
/// Throws GeometryInfeasible like lb_position_geometry.
double lb_position_ratio(double v, double alpha);

struct PositionBound {
  double bound = 0.0;
  double v = 0.0;
  double alpha = 0.0;
};

struct PositionSearchOptions {
  std::size_t grid_v = 512;
  std::size_t grid_alpha = 512;
  double v_min = 1.0;  // exclusive
  double v_max = 6.0;
  bool refine = true;
};

PositionBound lb_position_search(const PositionSearchOptions& options);
PositionBound lb_position_search(std::size_t grid_v, std::size_t grid_alpha);

}  // namespace pony
