#include "pony/offline_two.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>

#include "pony/error.hpp"
#include "pony/numeric.hpp"

namespace pony {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSoloTieTolerance = 1e-9;
constexpr double kTangencyGuard = 1e-12;
constexpr std::size_t kDetourScanSamples = 720;
constexpr double kDetourWidth = 1e-12;

constexpr std::size_t kSlow = 0;
constexpr std::size_t kFast = 1;

struct AtSource {
  double time = 0.0;
  TwoRobotCase kind = TwoRobotCase::kSlowSolo;
  Point meeting;
  double alpha = 0.0;
  double beta = 0.0;
};

void check_speed(double v) {
  if (!(v > 1.0 + kSpeedTolerance) || !std::isfinite(v)) {
    throw PonyError(ErrorCode::kDegenerateSpeed,
                    "fast robot must be strictly faster than the slow one");
  }
}

// Smaller non-negative parameter t with |k + t*u - c| = r, u a unit vector.
std::optional<double> first_hit(Point k, Point u, const Circle& c) {
  const Point w = k - c.center;
  const double b = dot(u, w);
  const double disc = std::max(0.0, b * b - (dot(w, w) - c.radius * c.radius));
  const double t = -b - std::sqrt(disc);
  if (t < 0.0) return std::nullopt;
  return t;
}

AtSource at_source(Point k, Point s, Point d, double v) {
  AtSource out;
  const double sd = distance(s, d);
  const double kd = distance(k, d);
  const double slow_solo = sd;
  const double fast_solo = (distance(k, s) + sd) / v;

  if (kd / v >= sd) {
    out.time = slow_solo;
    out.kind = TwoRobotCase::kSlowSolo;
    return out;
  }

  const Circle circle = apollonius_circle(k, s, v);
  const double beta = vertex_angle(s, k, d);
  out.beta = beta;

  bool straight = false;
  if (beta <= std::numbers::pi / 2 && v * std::sin(beta) <= 1.0 + kTangencyGuard) {
    const Point u = (d - k) / kd;
    if (auto t = first_hit(k, u, circle); t && kd >= *t) {
      out.meeting = k + *t * u;
      straight = true;
    }
  }
  if (!straight) out.meeting = bisector_meeting_point(circle, k, d, v);

  out.kind = TwoRobotCase::kHandover;
  out.time = (distance(k, out.meeting) + distance(out.meeting, d)) / v;
  out.alpha = signed_angle(k - circle.center, out.meeting - circle.center);

  const double best_solo = std::min(slow_solo, fast_solo);
  if (best_solo <= out.time + kSoloTieTolerance) {
    out.kind = slow_solo <= fast_solo ? TwoRobotCase::kSlowSolo : TwoRobotCase::kFastSolo;
    out.time = best_solo;
  }
  return out;
}

DeliveryPlan two_robot_solo(Point l, Point k, Point s, Point d, double v, bool fast) {
  Instance inst{s, d, {Robot{l, 1.0}, Robot{k, v}}};
  return solo_plan(inst, fast ? kFast : kSlow);
}

// Slow robot L -> S -> M, fast robot K -> Q -> M -> D.
DeliveryPlan handover_plan(Point l, Point k, Point q, Point m, Point s, Point d, double v) {
  DeliveryPlan plan;
  plan.trajectories.resize(2);
  const double a = distance(l, s);
  const double slow_at_m = a + distance(s, m);
  const double fast_at_q = distance(k, q) / v;
  const double fast_at_m = fast_at_q + distance(q, m) / v;
  const double meet = std::max(slow_at_m, fast_at_m);
  const double done = meet + distance(m, d) / v;

  Trajectory& slow = plan.trajectories[kSlow];
  append_waypoint(slow, 0.0, l);
  append_waypoint(slow, a, s);
  append_waypoint(slow, slow_at_m, m);
  append_waypoint(slow, meet, m);

  Trajectory& fast = plan.trajectories[kFast];
  append_waypoint(fast, 0.0, k);
  append_waypoint(fast, fast_at_q, q);
  append_waypoint(fast, fast_at_m, m);
  append_waypoint(fast, meet, m);
  append_waypoint(fast, done, d);

  plan.total_time = done;
  plan.events = {
      {EventKind::kPickup, a, s, std::nullopt, kSlow},
      {EventKind::kHandover, meet, m, kSlow, kFast},
      {EventKind::kDeliver, done, d, kFast, std::nullopt},
  };
  return plan;
}

}  // namespace

const char* to_string(TwoRobotCase c) {
  switch (c) {
    case TwoRobotCase::kFastSolo: return "fast_solo";
    case TwoRobotCase::kSlowSolo: return "slow_solo";
    case TwoRobotCase::kHandover: return "handover";
  }
  return "unknown";
}

TwoRobotSolution solve_two_at_source(Point k, Point s, Point d, double v) {
  check_speed(v);
  if (nearly_equal(k, s)) {
    throw PonyError(ErrorCode::kCoincidentPoints,
                    "fast robot starts at the source; the at-source solver needs K != S");
  }
  TwoRobotSolution sol;
  const AtSource r = at_source(k, s, d, v);
  sol.kind = r.kind;
  if (r.kind == TwoRobotCase::kHandover) {
    sol.meeting_point = r.meeting;
    sol.alpha = Angle{r.alpha};
    sol.beta = Angle{r.beta};
    sol.plan = handover_plan(s, k, k, r.meeting, s, d, v);
  } else {
    sol.plan = two_robot_solo(s, k, s, d, v, r.kind == TwoRobotCase::kFastSolo);
  }
  return sol;
}

TwoRobotSolution solve_two_general(Point l, Point k, Point s, Point d, double v) {
  check_speed(v);
  TwoRobotSolution sol;
  const double a = distance(l, s);
  const double sd = distance(s, d);
  const double ks = distance(k, s);
  const double slow_solo = a + sd;
  const double fast_solo = (ks + sd) / v;

  auto finish_solo = [&](bool fast) {
    sol.kind = fast ? TwoRobotCase::kFastSolo : TwoRobotCase::kSlowSolo;
    sol.plan = two_robot_solo(l, k, s, d, v, fast);
    return sol;
  };

  if (ks / v <= a) return finish_solo(true);
  if (distance(k, d) / v >= a + sd) return finish_solo(false);

  if (nearly_equal(l, s)) {
    TwoRobotSolution inner = solve_two_at_source(k, s, d, v);
    inner.plan = inner.kind == TwoRobotCase::kHandover
                     ? handover_plan(l, k, k, *inner.meeting_point, s, d, v)
                     : two_robot_solo(l, k, s, d, v, inner.kind == TwoRobotCase::kFastSolo);
    return inner;
  }

  const double reach = v * a;
  auto detour = [&](double beta) { return k + reach * Point{std::cos(beta), std::sin(beta)}; };
  auto inner_time = [&](double beta) {
    const Point q = detour(beta);
    if (nearly_equal(q, s)) return sd / v;
    return at_source(q, s, d, v).time;
  };

  const double step = kTwoPi / static_cast<double>(kDetourScanSamples);
  std::size_t best = 0;
  double best_value = inner_time(0.0);
  for (std::size_t i = 1; i < kDetourScanSamples; ++i) {
    const double t = inner_time(step * static_cast<double>(i));
    if (t < best_value) {
      best_value = t;
      best = i;
    }
  }
  double beta_star = step * static_cast<double>(best);
  const auto refined = numeric::golden_minimize(inner_time, beta_star - step, beta_star + step,
                                                kDetourWidth);
  if (refined.value < best_value) {
    best_value = refined.value;
    beta_star = refined.x;
  }

  const double handover_time = a + best_value;
  const double best_solo = std::min(slow_solo, fast_solo);
  if (best_solo <= handover_time + kSoloTieTolerance) return finish_solo(fast_solo < slow_solo);

  const Point q = detour(beta_star);
  const AtSource r = at_source(q, s, d, v);
  if (r.kind != TwoRobotCase::kHandover) return finish_solo(fast_solo < slow_solo);

  sol.kind = TwoRobotCase::kHandover;
  sol.meeting_point = r.meeting;
  sol.detour_point = q;
  sol.alpha = Angle{r.alpha};
  sol.beta = Angle{beta_star}.positive();
  sol.plan = handover_plan(l, k, q, r.meeting, s, d, v);
  return sol;
}

TwoRobotSolution solve_two(const Instance& instance) {
  validate(instance);
  if (instance.robots.size() != 2) {
    throw PonyError(ErrorCode::kInvalidInput, "two-robot mode needs exactly 2 robots");
  }
  const Robot& r0 = instance.robots[0];
  const Robot& r1 = instance.robots[1];
  const std::size_t slow_idx = r1.speed < r0.speed ? 1 : 0;
  const std::size_t fast_idx = 1 - slow_idx;
  const Robot& slow = instance.robots[slow_idx];
  const Robot& fast = instance.robots[fast_idx];
  const double u = slow.speed;
  const double v = fast.speed / u;

  TwoRobotSolution sol;
  if (v <= 1.0 + kSpeedTolerance) {
    const double t0 = solo_time(r0, instance.source, instance.destination);
    const double t1 = solo_time(r1, instance.source, instance.destination);
    const std::size_t pick = t1 < t0 ? 1 : 0;
    sol.kind = pick == slow_idx ? TwoRobotCase::kSlowSolo : TwoRobotCase::kFastSolo;
    sol.plan = solo_plan(instance, pick);
    return sol;
  }

  sol = solve_two_general(slow.start, fast.start, instance.source, instance.destination, v);
  scale_time(sol.plan, 1.0 / u);
  if (slow_idx != 0) {
    std::swap(sol.plan.trajectories[0], sol.plan.trajectories[1]);
    auto remap = [](std::optional<std::size_t>& idx) {
      if (idx) idx = 1 - *idx;
    };
    for (auto& e : sol.plan.events) {
      remap(e.from_robot);
      remap(e.to_robot);
    }
  }
  return sol;
}

double optimal_time_constraint_residual(Point m, Point l, Point k, Point s, double v) {
  const double a = distance(l, s);
  if (!(a > 0.0)) {
    throw PonyError(ErrorCode::kDegenerateInstance, "residual needs the slow robot away from S");
  }
  const double mk2 = dot(m - k, m - k);
  const double ms2 = dot(m - s, m - s);
  const double inner = mk2 / (2.0 * a * v * v) - ms2 / (2.0 * a) - a / 2.0;
  return inner * inner - ms2;
}

}  // namespace pony
