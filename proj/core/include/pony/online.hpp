#pragma once

#include <cstddef>
#include <vector>

#include "pony/plan.hpp"

namespace pony {

struct OnlineOutcome {
  double delivery_time = 0.0;
  std::size_t winning_robot = 0;  // lowest index among ties
  std::vector<double> per_robot_solo_time;
};

/// Every robot heads for S and then D on its own; the first arrival wins.
OnlineOutcome run_online(const Instance& instance);

/// Plan of the winning robot in run_online.
DeliveryPlan online_plan(const Instance& instance);

inline constexpr double kTwoRobotCompetitiveBound = 1.5224077499274828;  // (5 + 4 sqrt 2) / 7

/// Online time over optimal offline time for a two-robot instance. Instances
/// whose offline optimum is 0 (message already at D with a robot on it)
/// have ratio 1.
double competitive_ratio_two(const Instance& instance);

// Deployment on the unit segment S = (0,0), D = (1,0) in which every robot
// has online solo time 4, together with the prescribed relay through the
// meeting points m_i. Index i = 0 is the fastest robot.
struct RelayConstruction {
  int n = 0;
  std::vector<double> meeting_points;  // m_0 .. m_{n-2}
  std::vector<double> speeds;          // v_0 .. v_{n-1}
  std::vector<double> positions;       // p_0 .. p_{n-1}
  double online_time = 0.0;
  double relay_time = 0.0;      // 2 + 2 / (2^n - 1)
  Instance instance;
  DeliveryPlan relay_plan;      // r_{n-1} from S, each r_i waiting at m_i
  double simulated_time = 0.0;  // relay_plan.total_time

  double ratio() const { return online_time / relay_time; }
  double simulated_ratio() const { return online_time / simulated_time; }
};

/// Throws InvalidN when n < 3 or n > 60.
RelayConstruction build_relay_construction(int n);

/// 2 - 2 / (2^n - 1).
double relay_ratio_closed_form(int n);

}  // namespace pony
