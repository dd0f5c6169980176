#include "magswim/sim.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "magswim/errors.h"

namespace magswim {
namespace {

struct Grid {
  int steps;
  double h;
};

Grid make_grid(double duration, int steps_per_unit) {
  if (!(std::isfinite(duration) && duration > 0.0)) {
    throw InvalidArgumentError("rollout duration must be > 0");
  }
  if (steps_per_unit < kMinStepsPerUnit) {
    throw InvalidArgumentError("steps_per_unit must be >= 100");
  }
  const double exact = duration * steps_per_unit;
  const int steps = static_cast<int>(std::ceil(exact - 1e-9 * exact));
  return {std::max(steps, 1), duration / std::max(steps, 1)};
}

// A non-finite stage state yields a non-finite slope, so the step check
// below reports it instead of the drag solve.
Vec4 velocity(const SwimmerParams& params, const ControlSignal& signal,
              double t, const Vec4& q) {
  if (!q.allFinite()) return Vec4::Constant(NAN);
  return mobility(params, q.tail<2>()) * signal(t).vec();
}

// Classical fourth-order Runge-Kutta step.
template <typename Rhs, typename Vec>
Vec rk4_step(const Rhs& f, double t, const Vec& y, double h) {
  const Vec k1 = f(t, y);
  const Vec k2 = f(t + 0.5 * h, y + (0.5 * h) * k1);
  const Vec k3 = f(t + 0.5 * h, y + (0.5 * h) * k2);
  const Vec k4 = f(t + h, y + h * k3);
  return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

[[noreturn]] void non_finite(int step, double t) {
  std::ostringstream os;
  os << "state became non-finite at step " << step << " (t = " << t << ")";
  throw NonFiniteStateError(os.str());
}

template <typename Observer>
Vec4 integrate(const SwimmerParams& params, const ControlSignal& signal,
               const State& q0, double duration, int steps_per_unit, double t0,
               Observer&& observe) {
  params.validate();
  if (!q0.finite()) throw InvalidArgumentError("initial state must be finite");
  const Grid grid = make_grid(duration, steps_per_unit);
  auto f = [&](double t, const Vec4& q) {
    return velocity(params, signal, t, q);
  };
  Vec4 q = q0.vec();
  observe(0, t0, q);
  for (int i = 0; i < grid.steps; ++i) {
    const double t = t0 + i * grid.h;
    q = rk4_step(f, t, q, grid.h);
    if (!q.allFinite()) non_finite(i + 1, t + grid.h);
    observe(i + 1, t0 + (i + 1) * grid.h, q);
  }
  return q;
}

}  // namespace

Trajectory rollout(const SwimmerParams& params, const ControlSignal& signal,
                   const State& q0, double duration, int steps_per_unit,
                   double t0) {
  Trajectory traj;
  const Grid grid = make_grid(duration, steps_per_unit);
  traj.times.reserve(grid.steps + 1);
  traj.states.reserve(grid.steps + 1);
  traj.controls.reserve(grid.steps + 1);
  integrate(params, signal, q0, duration, steps_per_unit, t0,
            [&](int, double t, const Vec4& q) {
              traj.times.push_back(t);
              traj.states.push_back(State::from(q));
              traj.controls.push_back(signal(t));
            });
  return traj;
}

State rollout_final(const SwimmerParams& params, const ControlSignal& signal,
                    const State& q0, double duration, int steps_per_unit,
                    double t0) {
  return State::from(integrate(params, signal, q0, duration, steps_per_unit,
                               t0, [](int, double, const Vec4&) {}));
}

Angles integrate_orientation(const SwimmerParams& params,
                             const ControlSignal& signal, const Angles& theta0,
                             double t0, double duration, int steps) {
  if (steps < 1) throw InvalidArgumentError("steps must be >= 1");
  if (!theta0.allFinite()) throw InvalidArgumentError("theta0 must be finite");
  const double h = duration / steps;
  auto f = [&](double t, const Vec2& th) -> Vec2 {
    if (!th.allFinite()) return Vec2::Constant(NAN);
    return mobility(params, th).bottomRows<2>() * signal(t).vec();
  };
  Vec2 th = theta0;
  for (int i = 0; i < steps; ++i) {
    const double t = t0 + i * h;
    th = rk4_step(f, t, th, h);
    if (!th.allFinite()) non_finite(i + 1, t + h);
  }
  return th;
}

std::vector<CycleDelta> per_cycle_summary(const Trajectory& traj,
                                          double period) {
  if (!(period > 0.0)) throw InvalidArgumentError("period must be > 0");
  if (traj.size() < 2) {
    throw InvalidArgumentError("trajectory needs at least two samples");
  }
  const double h = traj.step();
  const double ratio = period / h;
  const long stride = std::lround(ratio);
  if (stride < 1 || std::abs(ratio - static_cast<double>(stride)) > 1e-9 * ratio) {
    std::ostringstream os;
    os << "period " << period << " is not a multiple of the step " << h;
    throw IncommensuratePeriodError(os.str());
  }
  const long cycles = static_cast<long>(traj.size() - 1) / stride;
  if (cycles < 1) {
    throw InvalidArgumentError("trajectory is shorter than one period");
  }
  std::vector<CycleDelta> rows;
  rows.reserve(cycles);
  for (long k = 0; k < cycles; ++k) {
    const State& a = traj.states[k * stride];
    const State& b = traj.states[(k + 1) * stride];
    rows.push_back({static_cast<int>(k), b.x - a.x, b.y - a.y,
                    b.theta1 - a.theta1, b.theta2 - a.theta2});
  }
  return rows;
}

}  // namespace magswim
