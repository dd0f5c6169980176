#include "magswim/primitives.h"

#include <cmath>
#include <sstream>

#include "magswim/errors.h"

namespace magswim {
namespace {

void check_drive(double b0, double omega) {
  if (!(std::isfinite(b0) && b0 > 0.0)) {
    throw InvalidArgumentError("field amplitude B0 must be > 0");
  }
  if (!(std::isfinite(omega) && omega > 0.0)) {
    throw InvalidArgumentError("omega must be > 0");
  }
}

std::size_t sample_at(const Trajectory& traj, double t) {
  const double h = traj.step();
  const double pos = (t - traj.times.front()) / h;
  const long k = std::lround(pos);
  if (k < 0 || static_cast<std::size_t>(k) >= traj.size() ||
      std::abs(pos - static_cast<double>(k)) > 1e-6) {
    std::ostringstream os;
    os << "time " << t << " is not on the trajectory grid";
    throw IncommensuratePeriodError(os.str());
  }
  return static_cast<std::size_t>(k);
}

}  // namespace

ControlSignal translate_signal(double b0, double omega, double heading) {
  check_drive(b0, omega);
  return make_const_plus_sine(b0, omega, heading);
}

ControlSignal rectangle_schedule(double b0, double omega,
                                 const std::array<double, 4>& switch_times) {
  check_drive(b0, omega);
  double prev = 0.0;
  std::vector<Leg> legs;
  for (int i = 0; i < 4; ++i) {
    if (!(switch_times[i] > prev)) {
      throw InvalidArgumentError(
          "rectangle switch times must satisfy 0 < t1 < t2 < t3 < t4");
    }
    legs.push_back({i * 0.5 * kPi, switch_times[i] - prev});
    prev = switch_times[i];
  }
  return heading_schedule(b0, omega, legs);
}

ControlSignal turn_in_place_signal(double b0, double omega, double omega_slow) {
  check_drive(b0, omega);
  if (!(std::isfinite(omega_slow) && omega_slow >= 0.0 && omega_slow < omega)) {
    throw InvalidArgumentError("omega_slow must lie in [0, omega)");
  }
  return make_rotating(translate_signal(b0, omega, 0.0), omega_slow);
}

ControlSignal heading_schedule(double b0, double omega,
                               const std::vector<Leg>& legs) {
  check_drive(b0, omega);
  if (legs.empty()) throw InvalidArgumentError("heading schedule needs legs");
  std::vector<std::pair<double, ControlSignal>> segments;
  for (const Leg& leg : legs) {
    if (!(std::isfinite(leg.duration) && leg.duration > 0.0)) {
      throw InvalidArgumentError("leg durations must be > 0");
    }
    segments.emplace_back(leg.duration,
                          make_const_plus_sine(b0, omega, leg.heading));
  }
  return make_schedule(segments);
}

std::vector<double> steady_leg_headings(const Trajectory& traj,
                                        const std::vector<Leg>& legs,
                                        double period, int settle_periods) {
  std::vector<double> headings;
  double start = traj.times.front();
  for (const Leg& leg : legs) {
    const double settle = settle_periods * period;
    if (!(leg.duration > settle)) {
      throw InvalidArgumentError("leg is shorter than the settling window");
    }
    const State& a = traj.states[sample_at(traj, start + settle)];
    const State& b = traj.states[sample_at(traj, start + leg.duration)];
    headings.push_back(std::atan2(b.y - a.y, b.x - a.x));
    start += leg.duration;
  }
  return headings;
}

TurnReport evaluate_turn_in_place(const SwimmerParams& params, double b0,
                                  double omega, double omega_slow,
                                  int settle_periods, int steps_per_unit) {
  if (!(omega_slow > 0.0)) {
    throw InvalidArgumentError("turn-in-place evaluation needs omega_slow > 0");
  }
  const ControlSignal signal = turn_in_place_signal(b0, omega, omega_slow);
  const double period = kTwoPi / omega;
  const double slow_period = kTwoPi / omega_slow;
  const double settle = settle_periods * period;
  const double duration = std::max(settle, slow_period) + slow_period;
  const Trajectory traj =
      rollout(params, signal, State{}, duration, steps_per_unit);

  auto mean_angle = [](const State& s) { return 0.5 * (s.theta1 + s.theta2); };
  auto drift = [](const State& a, const State& b) {
    return std::hypot(b.x - a.x, b.y - a.y);
  };
  TurnReport report;
  const State& s0 = traj.states.front();
  const State& s1 = traj.states[sample_at(traj, slow_period)];
  report.advance_from_rest = mean_angle(s1) - mean_angle(s0);
  report.drift_from_rest = drift(s0, s1);

  const State& a = traj.states[sample_at(traj, settle)];
  const State& b = traj.states[sample_at(traj, settle + slow_period)];
  report.steady_advance = mean_angle(b) - mean_angle(a);
  report.steady_drift = drift(a, b);
  for (const State& s : traj.states) {
    report.max_excursion = std::max(report.max_excursion, drift(s0, s));
  }
  return report;
}

}  // namespace magswim
