#include <gtest/gtest.h>

#include "pony/error.hpp"
#include "pony/plan.hpp"

namespace pony {
namespace {

Instance line_instance() {
  return {{0, 0}, {1, 0}, {Robot{{-1, 0}, 1.0}, Robot{{0.5, 0}, 2.0}}};
}

bool mentions(const FeasibilityReport& r, const std::string& needle) {
  for (const auto& v : r.violations)
    if (v.find(needle) != std::string::npos) return true;
  return false;
}

TEST(PositionAt, InterpolatesAndClamps) {
  const Trajectory tr{{1.0, {0, 0}}, {3.0, {2, 0}}, {4.0, {2, 1}}};
  EXPECT_EQ(position_at(tr, 0.0), (Point{0, 0}));
  EXPECT_EQ(position_at(tr, 2.0), (Point{1, 0}));
  EXPECT_EQ(position_at(tr, 3.5), (Point{2, 0.5}));
  EXPECT_EQ(position_at(tr, 9.0), (Point{2, 1}));
}

TEST(PositionAt, ZeroDurationSegmentTakesLaterPoint) {
  const Trajectory tr{{0.0, {0, 0}}, {1.0, {1, 0}}, {1.0, {1, 0}}, {2.0, {1, 1}}};
  EXPECT_EQ(position_at(tr, 1.0), (Point{1, 0}));
}

TEST(SoloPlan, RobotAtDestinationGoesOutAndBack) {
  const Instance inst{{0, 0}, {1, 0}, {Robot{{1, 0}, 1.0}}};
  const DeliveryPlan plan = solo_plan(inst, 0);
  EXPECT_DOUBLE_EQ(plan.total_time, 2.0);
  ASSERT_EQ(plan.events.size(), 2u);
  EXPECT_EQ(plan.events[0].kind, EventKind::kPickup);
  EXPECT_EQ(plan.events[1].kind, EventKind::kDeliver);
  EXPECT_TRUE(check_feasibility(plan, inst).ok());
}

TEST(Feasibility, AcceptsSoloPlans) {
  const Instance inst = line_instance();
  for (std::size_t i = 0; i < 2; ++i) {
    const auto report = check_feasibility(solo_plan(inst, i), inst);
    EXPECT_TRUE(report.ok()) << report.violations.front();
  }
}

TEST(Feasibility, FlagsSpeedViolation) {
  const Instance inst = line_instance();
  DeliveryPlan plan = solo_plan(inst, 0);
  scale_time(plan, 0.5);
  EXPECT_TRUE(mentions(check_feasibility(plan, inst), "exceeds its speed"));
}

TEST(Feasibility, FlagsHandoverAwayFromGiver) {
  const Instance inst = line_instance();
  DeliveryPlan plan = solo_plan(inst, 0);
  plan.events.insert(plan.events.begin() + 1,
                     PlanEvent{EventKind::kHandover, 1.25, {0.5, 0}, 0, 1});
  EXPECT_FALSE(check_feasibility(plan, inst).ok());
}

TEST(Feasibility, FlagsMissingDelivery) {
  const Instance inst = line_instance();
  DeliveryPlan plan = solo_plan(inst, 1);
  plan.events.pop_back();
  EXPECT_TRUE(mentions(check_feasibility(plan, inst), "never delivered"));
}

TEST(Feasibility, FlagsDeliveryWithoutMessage) {
  const Instance inst = line_instance();
  DeliveryPlan plan = solo_plan(inst, 1);
  plan.events.erase(plan.events.begin());
  EXPECT_TRUE(mentions(check_feasibility(plan, inst), "without the message"));
}

TEST(Feasibility, FlagsWrongStart) {
  const Instance inst = line_instance();
  DeliveryPlan plan = solo_plan(inst, 0);
  plan.trajectories[1].front().p = {7, 7};
  EXPECT_TRUE(mentions(check_feasibility(plan, inst), "start point"));
}

TEST(Validate, RejectsBadInstances) {
  auto code_of = [](const Instance& inst) {
    try {
      validate(inst);
    } catch (const PonyError& e) {
      return e.code();
    }
    return ErrorCode::kTooLarge;  // sentinel: no error
  };
  EXPECT_EQ(code_of({{0, 0}, {1, 0}, {}}), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of({{0, 0}, {1, 0}, {Robot{{0, 0}, 0.0}}}), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of({{0, 0}, {NAN, 0}, {Robot{{0, 0}, 1.0}}}), ErrorCode::kInvalidInput);
  EXPECT_EQ(code_of(line_instance()), ErrorCode::kTooLarge);
}

TEST(EventKindNames, RoundTrip) {
  for (EventKind k : {EventKind::kPickup, EventKind::kHandover, EventKind::kDeliver}) {
    EXPECT_EQ(event_kind_from_string(to_string(k)), k);
  }
  EXPECT_FALSE(event_kind_from_string("teleport").has_value());
}

}  // namespace
}  // namespace pony
