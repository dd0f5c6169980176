#ifndef MAGSWIM_MODEL_H_
#define MAGSWIM_MODEL_H_

#include "magswim/types.h"

namespace magswim {

// Dimensionless per-link magnetization components in the body frame,
// m = (m_t^1, m_t^2, m_n^1, m_n^2).
struct Magnetization {
  double tangential1 = 1.0;
  double tangential2 = 2.0;
  double normal1 = 0.0;
  double normal2 = 0.0;

  Magnetization scaled(double c) const {
    return {c * tangential1, c * tangential2, c * normal1, c * normal2};
  }
  bool is_zero() const {
    return tangential1 == 0.0 && tangential2 == 0.0 && normal1 == 0.0 &&
           normal2 == 0.0;
  }
  friend bool operator==(const Magnetization&, const Magnetization&) = default;
};

struct SwimmerParams {
  double link_length = 1.0;
  double drag_tangential = 1.0;  // xi_t, per unit length
  double drag_normal = 2.0;      // xi_n, per unit length
  double link_volume = 1.0;
  double magnetization_scale = 1.0;  // h
  Magnetization magnetization;

  // Throws InvalidArgumentError when a geometric or drag entry is not
  // strictly positive or any entry is non-finite. A zero magnetization is
  // accepted by the model layer (it yields G == 0); use `require_controllable`
  // where that degeneracy is an error.
  void validate() const;
  void require_controllable() const;

  friend bool operator==(const SwimmerParams&, const SwimmerParams&) = default;
};

enum class Link { kFirst, kSecond };

// Magnetization of one link expressed in the world frame.
Vec2 magnetization_world(const SwimmerParams& params, Link link, double theta);

// Planar (z) component of V * M x B.
double magnetic_torque(const Vec2& magnetization, const FieldVector& field,
                       double volume);

// Quasi-static balance D(theta) qdot = E(theta, m) u.
// Row order: world-x force, world-y force, total moment about the joint,
// moment of link 2 about the joint.
struct Dynamics {
  Mat4 drag;    // D
  Mat42 input;  // E
};

Dynamics assemble_dynamics(const SwimmerParams& params, const Angles& theta);

// Symmetric RFT resistance matrix R with rows (force x, force y, moment of
// link 1 about the joint, moment of link 2 about the joint). `drag` from
// assemble_dynamics equals R with row 3 replaced by rows 3 + 4.
Mat4 resistance_matrix(const SwimmerParams& params, const Angles& theta);

// G = D^{-1} E. Columns respond to unit Bx and unit By. Throws
// SingularDragError when the 1-norm condition number of D exceeds 1e12.
Mat42 mobility(const SwimmerParams& params, const Angles& theta);

inline constexpr double kDragConditionLimit = 1e12;

}  // namespace magswim

#endif  // MAGSWIM_MODEL_H_
