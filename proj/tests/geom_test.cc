#include <gtest/gtest.h>


#include "magswim/errors.h"
#include "magswim/geom.h"
#include "magswim/sim.h"
#include "oracles.h"
#include "support.h"

namespace {

using namespace magswim;
using testing_support::Gen;

TEST(Loops, ParametricForms) {
  const PhasedSine s = straight_crossing_loop();
  EXPECT_DOUBLE_EQ(loop_period(s), 1.0);
  const Angles p = loop_point(s, 0.1);
  EXPECT_DOUBLE_EQ(p[0], 0.35 * std::sin(kTwoPi * 0.1 - 1.817));
  EXPECT_DOUBLE_EQ(p[1], 0.53 * std::sin(kTwoPi * 0.1 - 0.7186));

  const RotatedEllipse e = offset_ellipse_loop();
  const Angles c(5 * kPi / 4, 3 * kPi / 4);
  EXPECT_TRUE(loop_point(e, 0.0).isApprox(c + rotation(kPi / 4) * Vec2(0.5, 0.0)));
  EXPECT_TRUE(loop_point(e, 0.25).isApprox(c + rotation(kPi / 4) * Vec2(0.0, 0.25)));
}

TEST(Loops, VelocityMatchesFiniteDifference) {
  const std::vector<ShapeLoop> loops = {
      straight_crossing_loop(), offset_ellipse_loop(),
      SampledLoop{loop_polyline(offset_ellipse_loop(), 4096), 1.0}};
  for (const ShapeLoop& loop : loops) {
    for (double t : {0.05, 0.31, 0.77}) {
      const double h = 1e-6;
      const Angles fd = (loop_point(loop, t + h) - loop_point(loop, t - h)) / (2 * h);
      EXPECT_LT((loop_velocity(loop, t) - fd).norm(), 2e-3 * (1 + fd.norm()));
    }
  }
}

TEST(Loops, ReversedTraversesBackwards) {
  for (const ShapeLoop& loop :
       {ShapeLoop{straight_crossing_loop()}, ShapeLoop{offset_ellipse_loop()}}) {
    const ShapeLoop back = reversed(loop);
    for (double t : {0.1, 0.4, 0.85}) {
      EXPECT_LT((loop_point(back, t) - loop_point(loop, -t + 1.0)).norm(), 1e-14);
    }
  }
}

TEST(Loops, Validation) {
  PhasedSine bad = straight_crossing_loop();
  bad.omega = 0.0;
  EXPECT_THROW(validate_loop(bad), InvalidArgumentError);
  SampledLoop open{{{0, 0}, {1, 0}, {1, 1}}, 1.0};
  EXPECT_THROW(validate_loop(open), InvalidArgumentError);
}

TEST(Decompose, StacksMobility) {
  Gen gen(31);
  const SwimmerParams p;
  for (int k = 0; k < 100; ++k) {
    const Angles th = gen.angles();
    const Decomposition d = decompose(p, th);
    const Mat42 g = mobility(p, th);
    EXPECT_EQ(d.position, g.topRows<2>());
    EXPECT_EQ(d.orientation, g.bottomRows<2>());
  }
  SwimmerParams aligned;
  aligned.magnetization = {1, 2, 0, 0};
  EXPECT_TRUE(decompose(aligned, {0, 0}).orientation.col(0).isZero(1e-15));
  EXPECT_GT(std::abs(decompose(p, {0.3, -0.2}).orientation.determinant()), 1e-3);
}

TEST(ConditionNumber, SpectralDefinition) {
  Mat2 m;
  m << 3, 1, -2, 5;
  const Eigen::JacobiSVD<Mat2> svd(m);
  const Vec2 sv = svd.singularValues();
  EXPECT_NEAR(condition_number(m), sv[0] / sv[1], 1e-13);
  EXPECT_EQ(condition_number(Mat2::Zero()), INFINITY);
  EXPECT_EQ(condition_number(Mat2::Identity()), 1.0);
}

TEST(LocalJacobian, SingularOnAlignment) {
  const SwimmerParams p;
  EXPECT_THROW(local_jacobian(p, {0, 0}), SingularOrientationError);
  EXPECT_THROW(local_jacobian(p, {1.0, 1.0 + kPi}), SingularOrientationError);
  EXPECT_TRUE(local_jacobian(p, {5 * kPi / 4, 3 * kPi / 4}).allFinite());
}

TEST(LocalJacobian, ConsistentAndScaleInvariant) {
  Gen gen(32);
  for (int k = 0; k < 100; ++k) {
    const SwimmerParams p = gen.params();
    const Angles th = gen.regular_angles();
    const Decomposition d = decompose(p, th);
    if (!(condition_number(d.orientation) < 1e6)) continue;
    const Mat2 j = local_jacobian(p, th);
    EXPECT_LT((j * d.orientation - d.position).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((j - oracle::jacobian(p, th)).cwiseAbs().maxCoeff(), 1e-9 * (1 + j.norm()));
    for (double c : {0.5, 3.0, -1.0}) {
      SwimmerParams q = p;
      q.magnetization = p.magnetization.scaled(c);
      EXPECT_LT((local_jacobian(q, th) - j).cwiseAbs().maxCoeff(), 1e-10 * (1 + j.norm()));
    }
  }
}

TEST(CurvatureField, MaskedAlongAlignment) {
  const CurvatureField f = curvature_field({}, {}, 64);
  EXPECT_EQ(f.resolution(), 64);
  EXPECT_GT(f.masked_count(), 0u);
  // The default grid [-pi, 2pi] with 64 nodes puts node i on theta1 = theta2
  // whenever i == j.
  for (int i = 0; i < 64; ++i) {
    EXPECT_TRUE(f.masked(i, i));
    EXPECT_TRUE(std::isnan(f.curl_x(i, i)));
  }
  // Nodes far from both singular families are populated.
  int populated = 0;
  for (int i = 0; i < 64; ++i) {
    for (int j = 0; j < 64; ++j) {
      const double d = std::remainder(f.theta1(i) - f.theta2(j), kPi);
      if (std::abs(d) > 0.5) {
        EXPECT_FALSE(f.masked(i, j));
        EXPECT_TRUE(std::isfinite(f.curl_x(i, j)));
        ++populated;
      }
    }
  }
  EXPECT_GT(populated, 64 * 64 / 2);
  EXPECT_THROW(curvature_field({}, {}, 63), InvalidArgumentError);
}

TEST(CurvatureField, ZeroMagnetizationIsFullyMasked) {
  SwimmerParams p;
  p.magnetization = {0, 0, 0, 0};
  const CurvatureField f = curvature_field(p, {}, 64);
  EXPECT_EQ(f.masked_count(), 64u * 64u);
}

TEST(CurvatureField, ThreadCountDoesNotChangeBits) {
  const CurvatureField a = curvature_field({}, {}, 96, 1);
  const CurvatureField b = curvature_field({}, {}, 96, 4);
  EXPECT_EQ(a.mask_data(), b.mask_data());
  for (std::size_t k = 0; k < a.curl_x_data().size(); ++k) {
    if (a.mask_data()[k]) continue;
    ASSERT_EQ(a.curl_x_data()[k], b.curl_x_data()[k]);
    ASSERT_EQ(a.curl_y_data()[k], b.curl_y_data()[k]);
  }
}

// Symmetries of the field on a grid symmetric about the origin:
//   point reflection theta -> -theta maps curl to diag(1, -1) curl;
//   relabelling the links (m swapped, theta -> (-theta2, -theta1)) does the
//   same.
TEST(CurvatureField, ReflectionSymmetry) {
  const GridBounds box{-kPi, kPi, -kPi, kPi};
  const int n = 65;
  const SwimmerParams p;
  SwimmerParams swapped = p;
  swapped.magnetization = {p.magnetization.tangential2, p.magnetization.tangential1,
                           p.magnetization.normal2, p.magnetization.normal1};
  const CurvatureField f = curvature_field(p, box, n);
  const CurvatureField g = curvature_field(swapped, box, n);
  double scale = 0.0;
  for (double v : f.curl_x_data()) {
    if (std::isfinite(v)) scale = std::max(scale, std::abs(v));
  }
  const double tol = 1e-8 * scale;
  for (int i = 1; i < n - 1; ++i) {
    for (int j = 1; j < n - 1; ++j) {
      if (f.masked(i, j)) continue;
      const int ri = n - 1 - i, rj = n - 1 - j;
      ASSERT_FALSE(f.masked(ri, rj));
      EXPECT_NEAR(f.curl_x(ri, rj), f.curl_x(i, j), tol);
      EXPECT_NEAR(f.curl_y(ri, rj), -f.curl_y(i, j), tol);
      ASSERT_FALSE(g.masked(rj, ri));
      EXPECT_NEAR(g.curl_x(rj, ri), f.curl_x(i, j), tol);
      EXPECT_NEAR(g.curl_y(rj, ri), -f.curl_y(i, j), tol);
    }
  }
}

TEST(LineIntegral, DegenerateAndReversed) {
  const SwimmerParams p;
  RotatedEllipse dot = offset_ellipse_loop();
  dot.radius1 = dot.radius2 = 0.0;
  EXPECT_EQ(loop_displacement_line(p, dot), Vec2::Zero());
  const Vec2 fwd = loop_displacement_line(p, offset_ellipse_loop());
  const Vec2 back = loop_displacement_line(p, reversed(offset_ellipse_loop()));
  EXPECT_GT(fwd.norm(), 1e-3);
  EXPECT_LT((fwd + back).norm(), 1e-12);
  // J has a removable singularity, so loops that merely cross the alignment
  // line integrate; a loop lying on it does not.
  EXPECT_NO_THROW(loop_displacement_line(p, straight_crossing_loop()));
  const PhasedSine aligned{0.3, 0.0, 0.0, 0.3, 0.0, 0.0, kTwoPi};
  EXPECT_THROW(loop_displacement_line(p, aligned), SingularOrientationError);
  EXPECT_THROW(loop_displacement_line(p, offset_ellipse_loop(), 100),
               InvalidArgumentError);
}

TEST(LineIntegral, ConvergesUnderRefinement) {
  const SwimmerParams p;
  const Vec2 a = loop_displacement_line(p, offset_ellipse_loop(), 1024);
  const Vec2 b = loop_displacement_line(p, offset_ellipse_loop(), 2048);
  const Vec2 c = loop_displacement_line(p, offset_ellipse_loop(), 4096);
  EXPECT_LT((b - c).norm(), 0.3 * (a - b).norm() + 1e-15);
}

TEST(SurfaceIntegral, StokesConsistency) {
  const SwimmerParams p;
  const ShapeLoop loop = offset_ellipse_loop();
  const Vec2 line = loop_displacement_line(p, loop);
  const CurvatureField coarse = curvature_field(p, {}, 128);
  const CurvatureField fine = curvature_field(p, {}, 256);
  const SurfaceDisplacement sc = loop_displacement_surface(coarse, loop);
  const SurfaceDisplacement sf = loop_displacement_surface(fine, loop);
  const Vec2 tol = (0.01 * line.cwiseAbs()).cwiseMax(sf.boundary_bound);
  EXPECT_LE(std::abs(sf.displacement.x() - line.x()), tol.x());
  EXPECT_LE(std::abs(sf.displacement.y() - line.y()), tol.y());
  EXPECT_LT((sf.displacement - line).norm(), (sc.displacement - line).norm());
  const SurfaceDisplacement back = loop_displacement_surface(fine, reversed(loop));
  EXPECT_LT((back.displacement + sf.displacement).norm(), 1e-12);
}

TEST(SurfaceIntegral, Errors) {
  const CurvatureField f = curvature_field({}, {}, 64);
  EXPECT_THROW(loop_displacement_surface(f, straight_crossing_loop()),
               MaskedCellInsideLoopError);
  RotatedEllipse far = offset_ellipse_loop();
  far.center1 = 10.0;
  EXPECT_THROW(loop_displacement_surface(f, far), LoopOutsideBoundsError);
  RotatedEllipse dot = offset_ellipse_loop();
  dot.radius1 = dot.radius2 = 0.0;
  EXPECT_EQ(loop_displacement_surface(f, dot).displacement, Vec2::Zero());
}

TEST(Inversion, RoundTripRetracesLoop) {
  const SwimmerParams p;
  const ShapeLoop loop = offset_ellipse_loop();
  const ControlSignal u = loop_to_control(p, loop);
  const auto& table = std::get<Sampled>(u.variant());
  ASSERT_EQ(table.times.size(), 2049u);
  for (std::size_t i = 0; i < table.times.size(); ++i) EXPECT_FALSE(u.excluded_at(i));
  const Trajectory traj = rollout(p, u, {0, 0, loop_point(loop, 0)[0],
                                         loop_point(loop, 0)[1]},
                                  1.0, 2048);
  double worst = 0.0;
  for (std::size_t i = 0; i < traj.size(); ++i) {
    worst = std::max(worst, (traj.states[i].angles() - loop_point(loop, traj.times[i])).norm());
  }
  EXPECT_LT(worst, 1e-3);
  // The closed gait translates along the x axis.
  const State end = traj.states.back();
  EXPECT_GT(std::abs(end.x), 10 * std::abs(end.y));
}

TEST(Inversion, ExcludesSamplesAtAlignmentCrossings) {
  const SwimmerParams p;
  const PhasedSine loop = straight_crossing_loop();
  const ControlSignal u = loop_to_control(p, loop);
  const int n = 2048;
  std::vector<int> crossings;
  for (int j = 0; j < n; ++j) {
    const Angles a = loop_point(loop, 1.0 * j / n);
    const Angles b = loop_point(loop, 1.0 * (j + 1) / n);
    if ((a[0] - a[1]) * (b[0] - b[1]) <= 0.0) crossings.push_back(j);
  }
  ASSERT_EQ(crossings.size(), 2u);
  int excluded = 0;
  for (int j = 0; j < n; ++j) {
    if (!u.excluded_at(j)) continue;
    ++excluded;
    int nearest = n;
    for (int c : crossings) {
      const int d = std::abs(j - c);
      nearest = std::min({nearest, d, n - d});
    }
    EXPECT_LT(nearest, 40) << "sample " << j;
    EXPECT_FALSE(condition_number(decompose(p, loop_point(loop, 1.0 * j / n))
                                      .orientation) <= 100.0);
  }
  for (int c : crossings) {
    EXPECT_TRUE(u.excluded_at(c) || u.excluded_at(c + 1));
  }
  EXPECT_GT(excluded, 0);
  EXPECT_LT(excluded, n / 5);
}

TEST(Inversion, DegenerateAndInfeasible) {
  const SwimmerParams p;
  RotatedEllipse dot = offset_ellipse_loop();
  dot.radius1 = dot.radius2 = 0.0;
  const ControlSignal u = loop_to_control(p, dot);
  for (const FieldVector& v : std::get<Sampled>(u.variant()).values) {
    EXPECT_EQ(v.bx, 0.0);
    EXPECT_EQ(v.by, 0.0);
  }
  // A loop hugging the alignment line cannot be inverted.
  const PhasedSine hug{0.3, 0.0, 0.0, 0.3, 0.05, 0.0, kTwoPi};
  EXPECT_THROW(loop_to_control(p, hug), LoopInfeasibleError);
  EXPECT_THROW(loop_to_control(p, offset_ellipse_loop(), {100, 100.0, 0.2}),
               InvalidArgumentError);
}

TEST(Regularize, PassesDcAndSlowSines) {
  Sampled table;
  const int n = 1024;
  for (int j = 0; j <= n; ++j) {
    const double t = 1.0 * j / n;
    table.times.push_back(t);
    table.values.push_back({0.3, 0.7 * std::sin(kTwoPi * t)});
  }
  table.periodic = true;
  const ControlSignal out = regularize_control(ControlSignal(table), 20 * kTwoPi);
  const auto& v = std::get<Sampled>(out.variant()).values;
  for (int j = 0; j <= n; ++j) {
    EXPECT_NEAR(v[j].bx, 1.0, 1e-12);
    EXPECT_NEAR(v[j].by, std::sin(kTwoPi * j / n), 2e-3);
  }
  table.periodic = false;
  const ControlSignal flat = regularize_control(ControlSignal(table), 20 * kTwoPi);
  for (const FieldVector& f : std::get<Sampled>(flat.variant()).values) {
    EXPECT_NEAR(f.bx, 1.0, 1e-12);
  }
}

TEST(Regularize, RecoversTranslationLawFromCrossingLoop) {
  const SwimmerParams p;
  const PhasedSine loop = straight_crossing_loop();
  const ControlSignal raw = loop_to_control(p, loop);
  const ControlSignal reg = regularize_control(raw, 2 * loop.omega);
  const auto& table = std::get<Sampled>(reg.variant());
  double ex = 0.0, ey = 0.0;
  for (std::size_t j = 0; j < table.times.size(); ++j) {
    ex = std::max(ex, std::abs(table.values[j].bx - 1.0));
    ey = std::max(ey, std::abs(table.values[j].by - std::sin(loop.omega * table.times[j])));
  }
  EXPECT_LT(ex, 0.15);
  EXPECT_LT(ey, 0.15);
}

TEST(Regularize, Errors) {
  Sampled all_bad;
  all_bad.times = {0.0, 0.5, 1.0};
  all_bad.values = {{NAN, NAN}, {NAN, NAN}, {NAN, NAN}};
  all_bad.excluded = {true, true, true};
  EXPECT_THROW(regularize_control(ControlSignal(all_bad), 1.0), InvalidArgumentError);
  EXPECT_THROW(regularize_control(make_const_plus_sine(1, 1, 0), 1.0),
               InvalidArgumentError);
  Sampled ok;
  ok.times = {0.0, 0.5, 1.0};
  ok.values = {{1, 0}, {1, 1}, {1, 0}};
  EXPECT_THROW(regularize_control(ControlSignal(ok), 100.0), InvalidArgumentError);
  ok.times = {0.0, 0.2, 1.0};
  EXPECT_THROW(regularize_control(ControlSignal(ok), 1.0), InvalidArgumentError);
}

}  // namespace
