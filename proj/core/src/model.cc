#include "magswim/model.h"

#include <cmath>
#include <sstream>
#include <string>


#include "magswim/errors.h"

namespace magswim {
namespace {

void require_positive(double value, const char* name) {
  if (!(std::isfinite(value) && value > 0.0)) {
    std::ostringstream os;
    os << "swimmer parameter " << name << " must be finite and > 0, got "
       << value;
    throw InvalidArgumentError(os.str());
  }
}

double one_norm(const Mat4& m) {
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

// Row vector r such that the planar torque on a link is r . (Bx, By).
Eigen::RowVector2d torque_row(const SwimmerParams& params, Link link,
                              double theta) {
  const Vec2 m = magnetization_world(params, link, theta);
  return {-params.link_volume * m.y(), params.link_volume * m.x()};
}

}  // namespace

void SwimmerParams::validate() const {
  require_positive(link_length, "link_length");
  require_positive(drag_tangential, "drag_tangential");
  require_positive(drag_normal, "drag_normal");
  require_positive(link_volume, "link_volume");
  require_positive(magnetization_scale, "magnetization_scale");
  const Magnetization& m = magnetization;
  for (double v : {m.tangential1, m.tangential2, m.normal1, m.normal2}) {
    if (!std::isfinite(v)) {
      throw InvalidArgumentError("magnetization entries must be finite");
    }
  }
}

void SwimmerParams::require_controllable() const {
  validate();
  if (magnetization.is_zero()) {
    throw InvalidArgumentError(
        "magnetization is identically zero; the swimmer is uncontrollable");
  }
}

Vec2 magnetization_world(const SwimmerParams& params, Link link,
                         double theta) {
  const Magnetization& m = params.magnetization;
  const double mt = link == Link::kFirst ? m.tangential1 : m.tangential2;
  const double mn = link == Link::kFirst ? m.normal1 : m.normal2;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double h = params.magnetization_scale;
  return {h * (mt * c - mn * s), h * (mt * s + mn * c)};
}

double magnetic_torque(const Vec2& magnetization, const FieldVector& field,
                       double volume) {
  return volume * (magnetization.x() * field.by - magnetization.y() * field.bx);
}

Mat4 resistance_matrix(const SwimmerParams& params, const Angles& theta) {
  const double len = params.link_length;
  const double xt = params.drag_tangential;
  const double xn = params.drag_normal;

  const double c1 = std::cos(theta[0]), s1 = std::sin(theta[0]);
  const double c2 = std::cos(theta[1]), s2 = std::sin(theta[1]);
  const Vec2 t1(c1, s1), n1(-s1, c1);
  const Vec2 t2(c2, s2), n2(-s2, c2);

  // Link 1 spans joint - s t1 (velocity pdot - s th1dot n1); link 2 spans
  // joint + s t2 (velocity pdot + s th2dot n2), s in [0, L]. Drag density
  // -(xt (v.t) t + xn (v.n) n) integrates exactly since v is affine in s.
  const Mat2 k1 = xt * t1 * t1.transpose() + xn * n1 * n1.transpose();
  const Mat2 k2 = xt * t2 * t2.transpose() + xn * n2 * n2.transpose();
  const double a = xn * len * len / 2.0;
  const double b = xn * len * len * len / 3.0;

  Mat4 r = Mat4::Zero();
  r.topLeftCorner<2, 2>() = len * (k1 + k2);
  r.block<2, 1>(0, 2) = -a * n1;
  r.block<2, 1>(0, 3) = a * n2;
  r.block<1, 2>(2, 0) = -a * n1.transpose();
  r(2, 2) = b;
  r.block<1, 2>(3, 0) = a * n2.transpose();
  r(3, 3) = b;
  return r;
}

Dynamics assemble_dynamics(const SwimmerParams& params, const Angles& theta) {
  Dynamics dyn;
  const Mat4 r = resistance_matrix(params, theta);
  dyn.drag.row(0) = r.row(0);
  dyn.drag.row(1) = r.row(1);
  dyn.drag.row(2) = r.row(2) + r.row(3);
  dyn.drag.row(3) = r.row(3);

  const Eigen::RowVector2d tau1 = torque_row(params, Link::kFirst, theta[0]);
  const Eigen::RowVector2d tau2 = torque_row(params, Link::kSecond, theta[1]);
  dyn.input.setZero();
  dyn.input.row(2) = tau1 + tau2;
  dyn.input.row(3) = tau2;
  return dyn;
}

Mat42 mobility(const SwimmerParams& params, const Angles& theta) {
  const Dynamics dyn = assemble_dynamics(params, theta);
  // Closed-form 4x4 inverse; the exact 1-norm condition number comes with it.
  Mat4 inverse;
  bool invertible = false;
  double determinant = 0.0;
  dyn.drag.computeInverseAndDetWithCheck(inverse, determinant, invertible, 0.0);
  const double cond =
      invertible ? one_norm(dyn.drag) * one_norm(inverse) : INFINITY;
  if (!(cond <= kDragConditionLimit)) {
    std::ostringstream os;
    os << "drag matrix is numerically singular (cond_1 = " << cond
       << ") at theta = (" << theta[0] << ", " << theta[1] << ")";
    throw SingularDragError(os.str());
  }
  // Only the two moment rows of E are non-zero.
  return inverse.rightCols<2>() * dyn.input.bottomRows<2>();
}

}  // namespace magswim
