#include <gtest/gtest.h>

#include "magswim/errors.h"
#include "magswim/primitives.h"
#include "support.h"

namespace {

using namespace magswim;

void expect_field(const FieldVector& u, const Vec2& v, double tol = 1e-14) {
  EXPECT_NEAR(u.bx, v.x(), tol);
  EXPECT_NEAR(u.by, v.y(), tol);
}

TEST(Translate, Values) {
  expect_field(translate_signal(1, kTwoPi)(0.0), {1, 0});
  expect_field(translate_signal(1, kTwoPi, kPi / 2)(0.0), {0, 1});
  EXPECT_THROW(translate_signal(0, kTwoPi), InvalidArgumentError);
  EXPECT_THROW(translate_signal(1, -1), InvalidArgumentError);
}

TEST(Translate, HeadingRotatesTheTrajectory) {
  const State q0{0.2, -0.1, 0.3, -0.5};
  const Mat2 r = rotation(kPi / 2);
  const Trajectory a = rollout({}, translate_signal(1, kTwoPi), q0, 3.0, 1000);
  State rq0 = q0;
  rq0.x = (r * q0.position()).x();
  rq0.y = (r * q0.position()).y();
  rq0.theta1 += kPi / 2;
  rq0.theta2 += kPi / 2;
  const Trajectory b = rollout({}, translate_signal(1, kTwoPi, kPi / 2), rq0, 3.0, 1000);
  for (std::size_t i = 0; i < a.size(); i += 100) {
    EXPECT_LT((r * a.states[i].position() - b.states[i].position()).norm(), 1e-9);
    EXPECT_NEAR(a.states[i].theta1 + kPi / 2, b.states[i].theta1, 1e-9);
  }
}

TEST(Rectangle, BoundariesAreQuarterTurns) {
  const std::array<double, 4> ts = {15, 30, 45, 60};
  const ControlSignal s = rectangle_schedule(1, kTwoPi, ts);
  const ControlSignal u = translate_signal(1, kTwoPi);
  for (int k = 0; k < 3; ++k) {
    const double t = ts[k];
    const double below = std::nextafter(t, 0.0);
    expect_field(s(below), rotation(k * kPi / 2) * u(below).vec());
    expect_field(s(t), rotation((k + 1) * kPi / 2) * u(t).vec());
  }
  expect_field(s(37.3), -u(37.3).vec());
  expect_field(s(60.0), rotation(3 * kPi / 2) * u(60.0).vec());
  EXPECT_THROW(rectangle_schedule(1, kTwoPi, {1, 3, 2, 4}), InvalidArgumentError);
  EXPECT_THROW(rectangle_schedule(1, kTwoPi, {0, 1, 2, 3}), InvalidArgumentError);
}

TEST(Headings, EquivalentConstructions) {
  const ControlSignal one = heading_schedule(1, kTwoPi, {{0.0, 5.0}});
  const ControlSignal plain = translate_signal(1, kTwoPi);
  const double d = 2.0;
  const ControlSignal legs = heading_schedule(
      1, kTwoPi, {{0, d}, {kPi / 2, d}, {kPi, d}, {3 * kPi / 2, d}});
  const ControlSignal rect = rectangle_schedule(1, kTwoPi, {d, 2 * d, 3 * d, 4 * d});
  for (double t : {0.0, 0.3, 1.99, 2.0, 4.5, 7.9, 8.0}) {
    if (t <= 5.0) EXPECT_EQ(one(t), plain(t));
    EXPECT_EQ(legs(t), rect(t));
  }
  EXPECT_THROW(heading_schedule(1, kTwoPi, {}), InvalidArgumentError);
  EXPECT_THROW(heading_schedule(1, kTwoPi, {{0.0, -1.0}}), InvalidArgumentError);
}

TEST(Headings, OctagonHasEightSteadyHeadings) {
  std::vector<Leg> legs;
  for (int k = 0; k < 8; ++k) legs.push_back({k * kPi / 4, 15.0});
  const ControlSignal s = heading_schedule(1, kTwoPi, legs);
  const Trajectory traj = rollout({}, s, {}, 120.0, 500);
  const std::vector<double> h = steady_leg_headings(traj, legs, 1.0);
  ASSERT_EQ(h.size(), 8u);
  for (int k = 0; k < 8; ++k) {
    EXPECT_LT(std::abs(wrap_angle(h[k] - legs[k].heading)), 0.1) << "leg " << k;
  }
}

TEST(Headings, SteadyHeadingFollowsConstantComponent) {
  for (double alpha : {0.0, 0.7, -2.0}) {
    const std::vector<Leg> legs = {{alpha, 15.0}};
    const Trajectory traj =
        rollout({}, heading_schedule(1, kTwoPi, legs), {}, 15.0, 1000);
    const double h = steady_leg_headings(traj, legs, 1.0)[0];
    EXPECT_LT(std::abs(wrap_angle(h - alpha)), 0.05);
  }
}

TEST(TurnInPlace, Signal) {
  expect_field(turn_in_place_signal(1, kTwoPi, kTwoPi / 10)(0.0), {1, 0});
  const ControlSignal still = turn_in_place_signal(1, kTwoPi, 0.0);
  const ControlSignal plain = translate_signal(1, kTwoPi);
  for (double t : {0.1, 0.6, 3.3}) EXPECT_EQ(still(t), plain(t));
  EXPECT_THROW(turn_in_place_signal(1, kTwoPi, kTwoPi), InvalidArgumentError);
  EXPECT_THROW(turn_in_place_signal(1, kTwoPi, -0.1), InvalidArgumentError);
}

TEST(TurnInPlace, FullTurnWithBoundedDrift) {
  const TurnReport r = evaluate_turn_in_place({}, 1.0, kTwoPi, kTwoPi / 10);
  EXPECT_NEAR(r.steady_advance, kTwoPi, 0.2);
  EXPECT_LT(r.steady_drift, 1.0);
  EXPECT_LT(r.max_excursion, 5.0);
  // From rest the swimmer starts behind the rotating field.
  EXPECT_LT(r.advance_from_rest, r.steady_advance);
}

}  // namespace
