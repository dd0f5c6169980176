#ifndef MAGSWIM_STABILITY_H_
#define MAGSWIM_STABILITY_H_

#include <array>
#include <complex>
#include <vector>

#include "magswim/model.h"
#include "magswim/signal.h"
#include "magswim/types.h"

namespace magswim {

// Stroboscopic section: the orientation subsystem is integrated from
// `phase` to `phase + period` in `steps_per_period` RK4 steps.
struct StrobeOptions {
  double phase = 0.0;
  int steps_per_period = 2000;
};

// S(theta0): orientation one forcing period after `phase`.
Angles strobe_map(const SwimmerParams& params, const ControlSignal& signal,
                  double period, const Angles& theta0,
                  const StrobeOptions& options = {});

struct LimitCycleOptions {
  double tolerance = 1e-10;
  int max_iterations = 200;
  double fd_step = 1e-6;
  StrobeOptions strobe;
};

struct StrobeResult {
  Angles fixed_point = Angles::Zero();
  Mat2 jacobian = Mat2::Identity();  // dS/dtheta at the fixed point
  std::array<std::complex<double>, 2> eigenvalues{};
  std::array<double, 2> multipliers{};  // |eigenvalues|, descending
  int iterations = 0;
  double residual = 0.0;  // |S(theta*) - theta*|
};

// Eigenvalues of a real 2x2 matrix from its trace and determinant.
std::array<std::complex<double>, 2> eigenvalues_2x2(const Mat2& m);

// Central-difference dS/dtheta at theta with step h.
Mat2 strobe_jacobian(const SwimmerParams& params, const ControlSignal& signal,
                     double period, const Angles& theta, double h,
                     const StrobeOptions& options = {});

// Picard iteration theta <- S(theta) until |S(theta) - theta| < tolerance,
// then Floquet multipliers from the finite-difference Jacobian. Throws
// NonConvergenceError after max_iterations.
StrobeResult find_limit_cycle(const SwimmerParams& params,
                              const ControlSignal& signal, double period,
                              const Angles& guess,
                              const LimitCycleOptions& options = {});

struct BasinOptions {
  int resolution = 17;  // nodes per axis over [lower, upper]^2
  double lower = -kPi;
  double upper = kPi;
  int cycles = 40;
  double convergence_distance = 1e-6;
  int threads = 1;
  StrobeOptions strobe;
};

struct BasinCell {
  Angles theta0 = Angles::Zero();
  // Component-wise distance to the reference fixed point, each component
  // wrapped into (-pi, pi]; history[k] is the distance after k cycles.
  std::vector<double> history;
  double final_distance = 0.0;
  bool converged = false;
  int first_converged_cycle = -1;  // -1 if never within the threshold
};

struct BasinMap {
  Angles reference = Angles::Zero();
  int resolution = 0;
  std::vector<BasinCell> cells;  // row-major: theta1 outer, theta2 inner

  double converged_fraction() const;
};

// Iterates the strobe map from every node of a square grid and measures the
// distance to `reference`. Divergent cells are reported, not thrown.
BasinMap basin_sample(const SwimmerParams& params, const ControlSignal& signal,
                      double period, const Angles& reference,
                      const BasinOptions& options = {});

}  // namespace magswim

#endif  // MAGSWIM_STABILITY_H_
