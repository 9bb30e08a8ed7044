#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "pony/error.hpp"
#include "pony/lower_bounds.hpp"

namespace pony {
namespace {

constexpr double kHalfPi = std::numbers::pi / 2;

SpeedRatios at(double v, double alpha, double beta) {
  return lb_speed_ratio({v, Angle{alpha}, Angle{beta}});
}

TEST(SpeedRatio, MeetingAtMIsOptimal) {
  for (double v : {1.3, 1.65, 1.9}) {
    for (double alpha : {0.4, 0.6597, 0.9}) {
      if (!lb_speed_admissible(v, alpha)) continue;
      EXPECT_NEAR(at(v, alpha, alpha).speed1, 1.0, 1e-12) << v << " " << alpha;
    }
  }
  EXPECT_TRUE(lb_speed_admissible(1.65, 0.6597));
}

TEST(SpeedRatio, AxisMeetingCostsNothingAgainstAParkedRobot) {
  // X on the axis is at distance v / (v + 1) from K, so the speed-0 ratio is 1.
  for (double v : {1.2, 1.65, 2.0}) {
    EXPECT_NEAR(at(v, 0.7, 0.0).speed0, 1.0, 1e-12);
  }
}

TEST(SpeedRatio, ReportedOptimumPoint) {
  const SpeedRatios r = at(1.65, 0.6597, 0.2312);
  EXPECT_NEAR(r.worst(), 1.0391, 1e-3);
  EXPECT_GT(r.speed1, 1.0);
  EXPECT_GT(r.speed0, 1.0);
}

TEST(SpeedRatio, AdmissibilityExcludesSlowWins) {
  // Near v = 1 the slow robot alone is competitive; nothing is admissible.
  for (double alpha = 0.05; alpha < kHalfPi; alpha += 0.05) {
    EXPECT_FALSE(lb_speed_admissible(1.01, alpha));
  }
}

TEST(SpeedSearch, DefaultResolutionFindsTheKnownBound) {
  const SpeedBound b = lb_speed_search(SpeedSearchOptions{});
  EXPECT_GE(b.bound, 1.0381);
  EXPECT_LE(b.bound, 1.0402);
  EXPECT_NEAR(b.argmax.v, 1.65, 0.03);
  EXPECT_NEAR(b.argmax.alpha.radians, 0.6597, 0.03);
  EXPECT_NEAR(b.argmax.beta.radians, 0.2312, 0.03);
}

TEST(SpeedSearch, RestrictingTheSpeedLowersTheBound) {
  SpeedSearchOptions fixed;
  fixed.grid_v = 1;
  fixed.v_min = 1.999;
  fixed.v_max = 2.0;
  fixed.grid_alpha = 128;
  fixed.grid_beta = 128;
  SpeedSearchOptions global = fixed;
  global.grid_v = 128;
  global.v_min = 1.0;
  const double at_two = lb_speed_search(fixed).bound;
  EXPECT_LT(at_two, lb_speed_search(global).bound);
}

TEST(SpeedSearch, ResolutionDoublingConverges) {
  const SpeedBound coarse = lb_speed_search(96, 96, 96);
  const SpeedBound fine = lb_speed_search(192, 192, 192);
  EXPECT_NEAR(coarse.bound, fine.bound, 1e-4);
  EXPECT_GE(fine.bound, coarse.bound - 1e-6);
}

TEST(SpeedSearch, IndependentOfThreadCount) {
  const char* saved = std::getenv("PONY_THREADS");
  const std::string restore = saved ? saved : "";
  ::setenv("PONY_THREADS", "1", 1);
  const SpeedBound one = lb_speed_search(64, 64, 64);
  ::setenv("PONY_THREADS", "3", 1);
  const SpeedBound three = lb_speed_search(64, 64, 64);
  if (saved) {
    ::setenv("PONY_THREADS", restore.c_str(), 1);
  } else {
    ::unsetenv("PONY_THREADS");
  }
  EXPECT_EQ(one.bound, three.bound);
  EXPECT_EQ(one.argmax.v, three.argmax.v);
  EXPECT_EQ(one.argmax.alpha.radians, three.argmax.alpha.radians);
}

TEST(PositionRatio, ReportedOptimumPoint) {
  EXPECT_NEAR(lb_position_ratio(2.7169, 0.8953), 1.04059, 1e-5);
}

TEST(PositionRatio, FlatMeetingIsHarmless) {
  for (double v : {1.5, 2.7, 5.0}) EXPECT_NEAR(lb_position_ratio(v, 1e-4), 1.0, 1e-3);
}

TEST(PositionRatio, SlowFastRobotGivesLittle) {
  for (double alpha = 0.01; alpha < kHalfPi; alpha += 0.01) {
    EXPECT_LT(lb_position_ratio(1.1, alpha), 1.01);
  }
}

TEST(PositionRatio, NoInfeasibleGeometryInTheSweepRange) {
  for (double v = 1.05; v <= 6.0; v += 0.05) {
    for (double alpha = 0.01; alpha < kHalfPi; alpha += 0.01) {
      EXPECT_NO_THROW(lb_position_ratio(v, alpha));
    }
  }
}

TEST(PositionGeometry, MatchesTheRatio) {
  for (double v : {1.4, 2.7169, 4.5}) {
    for (double alpha : {0.2, 0.8953, 1.4}) {
      const auto g = lb_position_geometry(v, alpha);
      const double q = v * v - 1;
      EXPECT_NEAR(distance(g.s, g.k1), 1.0, 1e-12);
      EXPECT_NEAR(distance(g.c1, g.s), 1.0 / q, 1e-12);
      EXPECT_NEAR(distance(g.c1, g.d), v * v / q, 1e-12);
      EXPECT_NEAR(distance(g.c1, g.m1), g.radius, 1e-12);
      EXPECT_NEAR(distance(g.c1, g.x), g.radius, 1e-12);
      EXPECT_NEAR(g.x.y, 0.0, 1e-15);
      // M1 is on the Apollonius circle of S and K1: |K1M1| = v |SM1|.
      EXPECT_NEAR(distance(g.k1, g.m1), v * distance(g.s, g.m1), 1e-12);
      const double sx = distance(g.s, g.x);
      const double sd = distance(g.s, g.d);
      const double want = (sx * (v - 1) + sd) / (2 * distance(g.k1, g.m1));
      EXPECT_NEAR(lb_position_ratio(v, alpha), want, 1e-9) << v << " " << alpha;
    }
  }
}

TEST(PositionGeometry, MirrorCandidateIsSymmetric) {
  const auto g = lb_position_geometry(2.7169, 0.8953);
  EXPECT_NEAR(g.k2.x, g.k1.x, 1e-12);
  EXPECT_NEAR(g.k2.y, -g.k1.y, 1e-12);
  EXPECT_NEAR(distance(g.k2, g.m2), distance(g.k1, g.m1), 1e-12);
  EXPECT_NEAR(distance(g.s, g.k2), 1.0, 1e-12);
  EXPECT_NEAR(distance(g.c2, g.x), g.radius, 1e-12);
}

TEST(PositionSearch, DefaultResolutionFindsTheKnownBound) {
  const PositionBound b = lb_position_search(PositionSearchOptions{});
  EXPECT_GE(b.bound, 1.0395);
  EXPECT_LE(b.bound, 1.0415);
  EXPECT_NEAR(b.v, 2.7169, 0.02);
  EXPECT_NEAR(b.alpha, 0.8953, 0.02);
  EXPECT_GE(b.bound, 1.04059 - 1e-3);
}

TEST(PositionSearch, ResolutionDoublingConverges) {
  const PositionBound coarse = lb_position_search(128, 128);
  const PositionBound fine = lb_position_search(256, 256);
  EXPECT_NEAR(coarse.bound, fine.bound, 1e-4);
  EXPECT_GE(fine.bound, coarse.bound - 1e-6);
}

TEST(PositionSearch, SliceAtLowSpeed) {
  PositionSearchOptions o;
  o.grid_v = 1;
  o.v_min = 1.09;
  o.v_max = 1.1;
  EXPECT_LT(lb_position_search(o).bound, 1.01);
}

}  // namespace
}  // namespace pony
