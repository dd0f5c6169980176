#ifndef MAGSWIM_GEOM_H_
#define MAGSWIM_GEOM_H_

#include <cstdint>
#include <variant>
#include <vector>

#include "magswim/model.h"
#include "magswim/signal.h"
#include "magswim/types.h"

namespace magswim {

// ---------------------------------------------------------------------------
// Shape loops in (theta1, theta2) space.

// theta_i(t) = amplitude_i * sin(omega t + phase_i) + offset_i
struct PhasedSine {
  double amplitude1 = 0.0, phase1 = 0.0, offset1 = 0.0;
  double amplitude2 = 0.0, phase2 = 0.0, offset2 = 0.0;
  double omega = kTwoPi;
};

// theta(t) = center + R(rotation) * (radius1 cos(omega t), radius2 sin(omega t))
// A negative radius reverses the direction of traversal.
struct RotatedEllipse {
  double radius1 = 0.0, radius2 = 0.0;
  double rotation = 0.0;
  double center1 = 0.0, center2 = 0.0;
  double omega = kTwoPi;
};

// Closed polyline (first point == last point), traversed at uniform speed
// in parameter over `period`.
struct SampledLoop {
  std::vector<Angles> points;
  double period = 1.0;
};

using ShapeLoop = std::variant<PhasedSine, RotatedEllipse, SampledLoop>;

void validate_loop(const ShapeLoop& loop);
double loop_period(const ShapeLoop& loop);
Angles loop_point(const ShapeLoop& loop, double t);
Angles loop_velocity(const ShapeLoop& loop, double t);
// `samples` + 1 points covering one period; SampledLoop returns its points.
std::vector<Angles> loop_polyline(const ShapeLoop& loop, int samples);
// Same curve traversed in the opposite direction.
ShapeLoop reversed(const ShapeLoop& loop);

// Loop of the form 0.35 sin(wt - 1.817), 0.53 sin(wt - 0.7186) around the
// straight configuration; it crosses theta1 = theta2 twice per period.
PhasedSine straight_crossing_loop(double omega = kTwoPi);
// Ellipse with radii (0.5, 0.25), rotated by pi/4, centred at (5pi/4, 3pi/4).
RotatedEllipse offset_ellipse_loop(double omega = kTwoPi);

// ---------------------------------------------------------------------------
// Position / orientation split of the mobility.

struct Decomposition {
  Mat2 position;     // P: pdot = P u
  Mat2 orientation;  // H: thetadot = H u
};

Decomposition decompose(const SwimmerParams& params, const Angles& theta);

// Spectral (2-norm) condition number of a 2x2 matrix; +inf when singular.
double condition_number(const Mat2& m);

inline constexpr double kOrientationConditionLimit = 1e8;

// J = P H^{-1}, so pdot = J thetadot. Throws SingularOrientationError when
// cond(H) exceeds kOrientationConditionLimit.
Mat2 local_jacobian(const SwimmerParams& params, const Angles& theta);

// ---------------------------------------------------------------------------
// Curvature (curl J) field.

struct GridBounds {
  double theta1_min = -kPi, theta1_max = kTwoPi;
  double theta2_min = -kPi, theta2_max = kTwoPi;
};

class CurvatureField {
 public:
  CurvatureField(GridBounds bounds, int resolution);

  const GridBounds& bounds() const { return bounds_; }
  int resolution() const { return resolution_; }
  double spacing1() const { return spacing1_; }
  double spacing2() const { return spacing2_; }
  double theta1(int i) const { return bounds_.theta1_min + i * spacing1_; }
  double theta2(int j) const { return bounds_.theta2_min + j * spacing2_; }

  // Row-major: theta1 index outer, theta2 index inner.
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * resolution_ + j;
  }
  double curl_x(int i, int j) const { return curl_x_[index(i, j)]; }
  double curl_y(int i, int j) const { return curl_y_[index(i, j)]; }
  bool masked(int i, int j) const { return mask_[index(i, j)] != 0; }

  std::vector<double>& curl_x_data() { return curl_x_; }
  std::vector<double>& curl_y_data() { return curl_y_; }
  std::vector<std::uint8_t>& mask_data() { return mask_; }
  const std::vector<double>& curl_x_data() const { return curl_x_; }
  const std::vector<double>& curl_y_data() const { return curl_y_; }
  const std::vector<std::uint8_t>& mask_data() const { return mask_; }

  std::size_t masked_count() const;

 private:
  GridBounds bounds_;
  int resolution_;
  double spacing1_;
  double spacing2_;
  std::vector<double> curl_x_;
  std::vector<double> curl_y_;
  std::vector<std::uint8_t> mask_;
};

inline constexpr int kMinFieldResolution = 64;

// curl_k = d J_{k,2} / d theta1 - d J_{k,1} / d theta2 on a `resolution` x
// `resolution` node grid, central differences with the grid spacing
// (second-order one-sided on the border). Nodes whose stencil touches a
// singular-H evaluation are masked and hold quiet NaN.
CurvatureField curvature_field(const SwimmerParams& params,
                               const GridBounds& bounds = {},
                               int resolution = 256, int threads = 1);

// ---------------------------------------------------------------------------
// Displacement per loop traversal.

// Trapezoidal sum of J dtheta along the loop polyline.
Vec2 loop_displacement_line(const SwimmerParams& params, const ShapeLoop& loop,
                            int samples = 2048);

struct SurfaceDisplacement {
  Vec2 displacement = Vec2::Zero();
  // Sum of |curl| * cell area over nodes within one grid spacing of the
  // loop: bounds the error from cells the boundary only partly covers.
  Vec2 boundary_bound = Vec2::Zero();
  int cells_inside = 0;
};

// Sum of curl over nodes whose centres lie inside the loop (even-odd rule)
// times the cell area, signed by the loop orientation (counter-clockwise
// positive) so it matches the line integral.
SurfaceDisplacement loop_displacement_surface(const CurvatureField& field,
                                              const ShapeLoop& loop,
                                              int polygon_samples = 2048);

// ---------------------------------------------------------------------------
// Loop-to-control inversion.

struct InversionOptions {
  int samples = 2048;
  // Samples whose cond(H) exceeds this are flagged excluded. Away from the
  // theta1 = theta2 (mod pi) lines cond(H) stays O(1..10).
  double exclusion_condition = 100.0;
  double max_excluded_fraction = 0.2;
};

// u(t_j) = H^{-1}(theta_d(t_j)) thetadot_d(t_j) at samples + 1 uniform times
// over one period. Returns a periodic Sampled signal carrying the raw values
// (NaN where H is numerically singular) and exclusion flags. Throws
// LoopInfeasibleError when more than max_excluded_fraction is excluded.
ControlSignal loop_to_control(const SwimmerParams& params,
                              const ShapeLoop& loop,
                              const InversionOptions& options = {});

// Gap-fills excluded samples linearly, applies a first-order bilinear
// low-pass forward and backward (zero phase; wrap-around padding for periodic
// tables, odd reflection otherwise) and divides each component by its peak
// absolute value. `cutoff` is an angular frequency (rad per time unit).
ControlSignal regularize_control(const ControlSignal& raw, double cutoff);

}  // namespace magswim

#endif  // MAGSWIM_GEOM_H_
