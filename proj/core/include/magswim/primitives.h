#ifndef MAGSWIM_PRIMITIVES_H_
#define MAGSWIM_PRIMITIVES_H_

#include <array>
#include <vector>

#include "magswim/model.h"
#include "magswim/signal.h"
#include "magswim/sim.h"

namespace magswim {

// B0 R(alpha) (1, sin wt): steady translation along the constant component.
ControlSignal translate_signal(double b0, double omega, double heading = 0.0);

// Four segments ending at t1 < t2 < t3 < t4 with headings 0, pi/2, pi,
// 3pi/2. Every segment rotates u_trans evaluated at global time.
ControlSignal rectangle_schedule(double b0, double omega,
                                 const std::array<double, 4>& switch_times);

// R(omega_slow t) u_trans(t).
ControlSignal turn_in_place_signal(double b0, double omega, double omega_slow);

struct Leg {
  double heading = 0.0;
  double duration = 0.0;
};

// Rotated translate signals back to back, phase-continuous in global time.
ControlSignal heading_schedule(double b0, double omega,
                               const std::vector<Leg>& legs);

inline constexpr int kDefaultSettlePeriods = 10;

// Heading of the swimmer displacement over the part of each leg that follows
// `settle_periods` forcing periods. Legs must be at least that long.
std::vector<double> steady_leg_headings(const Trajectory& traj,
                                        const std::vector<Leg>& legs,
                                        double period,
                                        int settle_periods = kDefaultSettlePeriods);

struct TurnReport {
  // Change of (theta1 + theta2) / 2 over the slow period that starts after
  // settle_periods forcing periods.
  double steady_advance = 0.0;
  // Joint displacement over that same slow period.
  double steady_drift = 0.0;
  // The same two quantities measured over the first slow period from rest
  // (includes the start-up lag behind the rotating field).
  double advance_from_rest = 0.0;
  double drift_from_rest = 0.0;
  // Largest joint distance from the start over the whole run.
  double max_excursion = 0.0;
};

TurnReport evaluate_turn_in_place(const SwimmerParams& params, double b0,
                                  double omega, double omega_slow,
                                  int settle_periods = kDefaultSettlePeriods,
                                  int steps_per_unit = kDefaultStepsPerUnit);

}  // namespace magswim

#endif  // MAGSWIM_PRIMITIVES_H_
