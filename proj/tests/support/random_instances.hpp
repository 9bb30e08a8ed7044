#pragma once

#include <cstdint>
#include <random>

#include "pony/geometry.hpp"
#include "pony/plan.hpp"

namespace pony::testing {

inline constexpr std::uint64_t kSeed = 42;

struct TwoRobotDraw {
  Point l, k, s, d;
  double v = 2.0;

  Instance instance() const { return {s, d, {Robot{l, 1.0}, Robot{k, v}}}; }
};

inline Point random_point(std::mt19937_64& rng, double box) {
  std::uniform_real_distribution<double> c(-box, box);
  const double x = c(rng);
  return {x, c(rng)};
}

/// Slow robot speed 1 at L, fast robot speed v at K.
inline TwoRobotDraw random_two_robot(std::mt19937_64& rng, double box = 5.0, double v_lo = 1.05,
                                     double v_hi = 10.0) {
  TwoRobotDraw t;
  t.l = random_point(rng, box);
  t.k = random_point(rng, box);
  t.s = random_point(rng, box);
  t.d = random_point(rng, box);
  t.v = std::uniform_real_distribution<double>(v_lo, v_hi)(rng);
  return t;
}

inline Instance random_instance(std::mt19937_64& rng, std::size_t robots, double box,
                                double speed_lo, double speed_hi) {
  Instance inst;
  inst.source = random_point(rng, box);
  inst.destination = random_point(rng, box);
  std::uniform_real_distribution<double> speed(speed_lo, speed_hi);
  for (std::size_t i = 0; i < robots; ++i) {
    const Point p = random_point(rng, box);
    inst.robots.push_back({p, speed(rng)});
  }
  return inst;
}

}  // namespace pony::testing
