#ifndef MAGSWIM_SIM_H_
#define MAGSWIM_SIM_H_

#include <cstddef>
#include <vector>

#include "magswim/model.h"
#include "magswim/signal.h"
#include "magswim/types.h"

namespace magswim {

inline constexpr int kDefaultStepsPerUnit = 2000;
inline constexpr int kMinStepsPerUnit = 100;

// Dense trajectory on a uniform time grid; controls[i] = signal(times[i]).
struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  std::vector<FieldVector> controls;

  std::size_t size() const { return times.size(); }
  double step() const { return times.size() > 1 ? times[1] - times[0] : 0.0; }
};

// Classical RK4 of qdot = mobility(theta) * signal(t) from t0 over
// `duration`. The step is duration / N with N = ceil(duration * steps_per_unit),
// so the grid ends exactly at t0 + duration. Throws NonFiniteStateError on
// the first non-finite state (its step index is in the message).
Trajectory rollout(const SwimmerParams& params, const ControlSignal& signal,
                   const State& q0, double duration,
                   int steps_per_unit = kDefaultStepsPerUnit, double t0 = 0.0);

// Same integration as `rollout` but only returns the final state.
State rollout_final(const SwimmerParams& params, const ControlSignal& signal,
                    const State& q0, double duration,
                    int steps_per_unit = kDefaultStepsPerUnit, double t0 = 0.0);

// Integrates only the orientation subsystem thetadot = H(theta) u(t) with
// exactly `steps` RK4 steps of size duration / steps.
Angles integrate_orientation(const SwimmerParams& params,
                             const ControlSignal& signal, const Angles& theta0,
                             double t0, double duration, int steps);

struct CycleDelta {
  int cycle = 0;  // zero-based
  double dx = 0.0;
  double dy = 0.0;
  double dtheta1 = 0.0;
  double dtheta2 = 0.0;
};

// State differences between consecutive multiples of `period` (measured from
// the first sample). Throws IncommensuratePeriodError unless the period is a
// multiple of the step to within 1e-9, InvalidArgumentError if the trajectory
// is shorter than one period.
std::vector<CycleDelta> per_cycle_summary(const Trajectory& traj,
                                          double period);

}  // namespace magswim

#endif  // MAGSWIM_SIM_H_
