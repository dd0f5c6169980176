#ifndef MAGSWIM_TYPES_H_
#define MAGSWIM_TYPES_H_

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

namespace magswim {

using Vec2 = Eigen::Vector2d;
using Vec4 = Eigen::Vector4d;
using Mat2 = Eigen::Matrix2d;
using Mat4 = Eigen::Matrix4d;
using Mat42 = Eigen::Matrix<double, 4, 2>;

// Link orientations (theta1, theta2) in the world frame, radians, unwrapped.
using Angles = Eigen::Vector2d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Spatially uniform magnetic field (Bx, By) in world axes.
struct FieldVector {
  double bx = 0.0;
  double by = 0.0;

  Vec2 vec() const { return {bx, by}; }
  static FieldVector from(const Vec2& v) { return {v.x(), v.y()}; }
  friend bool operator==(const FieldVector&, const FieldVector&) = default;
};

// Configuration q = (x, y, theta1, theta2). (x, y) is the joint.
struct State {
  double x = 0.0;
  double y = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;

  Vec4 vec() const { return {x, y, theta1, theta2}; }
  Vec2 position() const { return {x, y}; }
  Angles angles() const { return {theta1, theta2}; }
  static State from(const Vec4& v) { return {v[0], v[1], v[2], v[3]}; }
  bool finite() const {
    return std::isfinite(x) && std::isfinite(y) && std::isfinite(theta1) &&
           std::isfinite(theta2);
  }
  friend bool operator==(const State&, const State&) = default;
};

inline Mat2 rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Mat2 r;
  r << c, -s, s, c;
  return r;
}

// Wraps an angle difference into (-pi, pi].
inline double wrap_angle(double a) {
  double w = std::remainder(a, kTwoPi);
  if (w <= -kPi) w += kTwoPi;
  return w;
}

}  // namespace magswim

#endif  // MAGSWIM_TYPES_H_
