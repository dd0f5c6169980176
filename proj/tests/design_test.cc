#include <gtest/gtest.h>

#include "magswim/design.h"
#include "magswim/errors.h"
#include "oracles.h"

namespace {

using namespace magswim;

OptimizeOptions small_grid() {
  OptimizeOptions o;
  o.resolution = 8;
  o.cycles = 3;
  o.steps_per_unit = 400;
  return o;
}

TEST(Objective, ZeroMagnetizationDoesNotMove) {
  const ObjectiveCell c =
      evaluate_magnetization({}, 0.0, 0.0, make_const_plus_sine(1, kTwoPi, 0), 1.0, 3, 400);
  EXPECT_TRUE(c.ok);
  EXPECT_EQ(c.first_cycle_dx, 0.0);
  EXPECT_EQ(c.steady_cycle_dx, 0.0);
}

TEST(Objective, FieldMagnetizationScaling) {
  const std::vector<std::pair<double, double>> cells = {
      {0.5, 1.0}, {1.0, 2.0}, {1.75, 0.5}, {0.25, 3.5}};
  for (auto [c1, c2] : cells) {
    for (double s : {2.0, 0.5}) {
      const ObjectiveCell a = evaluate_magnetization(
          {}, c1, c2, make_const_plus_sine(1.0, kTwoPi, 0), 1.0, 4, 1000);
      const ObjectiveCell b = evaluate_magnetization(
          {}, s * c1, s * c2, make_const_plus_sine(1.0 / s, kTwoPi, 0), 1.0, 4, 1000);
      EXPECT_NEAR(a.first_cycle_dx, b.first_cycle_dx, 1e-10);
      EXPECT_NEAR(a.steady_cycle_dx, b.steady_cycle_dx, 1e-10);
    }
  }
}

TEST(Objective, SteadyValueIsSymmetricUnderMagnetizationFlip) {
  // Flipping m is flipping u, i.e. rotating the scene by pi: the limit cycle
  // is the same up to that rotation, the start from theta = 0 is not.
  for (auto [c1, c2] : std::vector<std::pair<double, double>>{
           {1.0, 2.0}, {0.5, 3.0}, {2.0, 1.0}, {1.5, 1.5}}) {
    const ControlSignal u = make_const_plus_sine(1.0, kTwoPi, 0);
    const ObjectiveCell a = evaluate_magnetization({}, c1, c2, u, 1.0, 12, 1000);
    const ObjectiveCell b = evaluate_magnetization({}, -c1, -c2, u, 1.0, 12, 1000);
    EXPECT_NEAR(a.steady_cycle_dx, b.steady_cycle_dx, 1e-6 * a.steady_cycle_dx + 1e-12);
  }
}

TEST(Optimize, SurfaceShapeAndFeasibleLine) {
  const ObjectiveSurface s = optimize_magnetization({}, small_grid());
  ASSERT_EQ(s.c1_axis.size(), 8u);
  ASSERT_EQ(s.cells.size(), 64u);
  EXPECT_DOUBLE_EQ(s.c1_axis.front(), 0.25);
  EXPECT_DOUBLE_EQ(s.c2_axis.back(), 4.0);
  EXPECT_EQ(s.at(2, 3).c1, s.c1_axis[2]);
  EXPECT_EQ(s.at(2, 3).c2, s.c2_axis[3]);
  for (const ObjectiveCell& c : s.cells) EXPECT_TRUE(c.ok);
  ASSERT_FALSE(s.feasible_line.empty());
  for (const ObjectiveCell& c : s.feasible_line) {
    EXPECT_TRUE(c.feasible);
    EXPECT_DOUBLE_EQ(c.c2, 2.0 * c.c1);
  }
  for (const ObjectiveCell& c : s.cells) {
    EXPECT_LE(c.first_cycle_dx, s.cells[s.argmax_first].first_cycle_dx);
    EXPECT_LE(c.steady_cycle_dx, s.cells[s.argmax_steady].steady_cycle_dx);
  }
}

TEST(Optimize, DeterministicAcrossThreadCounts) {
  OptimizeOptions a = small_grid();
  OptimizeOptions b = small_grid();
  b.threads = 3;
  const ObjectiveSurface sa = optimize_magnetization({}, a);
  const ObjectiveSurface sb = optimize_magnetization({}, b);
  for (std::size_t k = 0; k < sa.cells.size(); ++k) {
    EXPECT_EQ(sa.cells[k].first_cycle_dx, sb.cells[k].first_cycle_dx);
    EXPECT_EQ(sa.cells[k].steady_cycle_dx, sb.cells[k].steady_cycle_dx);
  }
  EXPECT_EQ(sa.argmax_first, sb.argmax_first);
}

TEST(Optimize, RejectsBadGrids) {
  OptimizeOptions o = small_grid();
  o.resolution = 7;
  EXPECT_THROW(optimize_magnetization({}, o), InvalidArgumentError);
  o = small_grid();
  o.c1 = {1.0, 1.0};
  EXPECT_THROW(optimize_magnetization({}, o), InvalidArgumentError);
  o = small_grid();
  o.c2 = {0.0, INFINITY};
  EXPECT_THROW(optimize_magnetization({}, o), InvalidArgumentError);
}

TEST(TurningTime, MatchesClosedFormAndQuadrature) {
  for (double k : {1.0, 2.0, 4.0, 8.0}) {
    for (double delta : {0.05, 0.3, 1.0}) {
      const double t = turning_time(1.0, k, delta);
      const double closed = turning_time_analytic(k, delta);
      const double quad = oracle::turning_time_by_quadrature(k, delta);
      EXPECT_NEAR(t / closed, 1.0, 1e-6);
      EXPECT_NEAR(quad / closed, 1.0, 1e-10);
    }
  }
}

TEST(TurningTime, InverseInRate) {
  const double base = turning_time(1.0, 1.0, 0.05);
  for (double k : {2.0, 4.0, 8.0}) {
    EXPECT_NEAR(turning_time(1.0, k, 0.05) * k / base, 1.0, 1e-6);
    // Only the ratio gain / drag matters.
    EXPECT_NEAR(turning_time(k, k * k, 0.05) / turning_time(1.0, k, 0.05), 1.0, 1e-6);
  }
  EXPECT_EQ(turning_time(1.0, 1.0, kPi / 2), 0.0);
}

TEST(TurningTime, Errors) {
  EXPECT_THROW(turning_time(1.0, 0.0, 0.05), InvalidArgumentError);
  EXPECT_THROW(turning_time(0.0, 1.0, 0.05), InvalidArgumentError);
  EXPECT_THROW(turning_time(1.0, 1.0, 0.0), InvalidArgumentError);
  EXPECT_THROW(turning_time(1.0, 1.0, 2.0), InvalidArgumentError);
  EXPECT_THROW(turning_time_analytic(-1.0, 0.1), InvalidArgumentError);
}

TEST(TurningTime, SingleLinkCoefficients) {
  SwimmerParams p;
  p.link_length = 2.0;
  p.drag_normal = 3.0;
  EXPECT_DOUBLE_EQ(single_link_rotational_drag(p), 3.0 * 8.0 / 12.0);
  p.magnetization = {3, 0, 4, 0};
  p.link_volume = 0.5;
  p.magnetization_scale = 2.0;
  EXPECT_DOUBLE_EQ(single_link_torque_gain(p, Link::kFirst, 1.5), 0.5 * 10.0 * 1.5);
}

}  // namespace
