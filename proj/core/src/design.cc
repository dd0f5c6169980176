#include "magswim/design.h"

#include <cmath>
#include <sstream>

#include "magswim/errors.h"
#include "magswim/parallel.h"
#include "magswim/sim.h"

namespace magswim {
namespace {

std::vector<double> axis(const Range& r, int n) {
  std::vector<double> a(n);
  for (int i = 0; i < n; ++i) {
    a[i] = n == 1 ? r.lo : r.lo + (r.hi - r.lo) * i / (n - 1);
  }
  return a;
}

bool on_ratio(double c1, double c2, double ratio) {
  return c1 != 0.0 && std::abs(c2 / c1 - ratio) <= 1e-9 * std::abs(ratio);
}

std::size_t argmax(const std::vector<ObjectiveCell>& cells,
                   double ObjectiveCell::*field) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < cells.size(); ++i) {
    const bool better = cells[i].ok && (!cells[best].ok ||
                                        cells[i].*field > cells[best].*field);
    if (better) best = i;
  }
  return best;
}

}  // namespace

ObjectiveCell evaluate_magnetization(const SwimmerParams& base, double c1,
                                     double c2, const ControlSignal& signal,
                                     double period, int cycles,
                                     int steps_per_unit) {
  if (cycles < 1) throw InvalidArgumentError("cycles must be >= 1");
  ObjectiveCell cell;
  cell.c1 = c1;
  cell.c2 = c2;
  SwimmerParams params = base;
  params.magnetization = {c1, c2, 0.0, 0.0};
  try {
    State q{};
    State prev{};
    for (int k = 1; k <= cycles; ++k) {
      prev = q;
      q = rollout_final(params, signal, q, period, steps_per_unit,
                        (k - 1) * period);
      if (k == 1) cell.first_cycle_dx = std::abs(q.x);
    }
    cell.steady_cycle_dx = std::abs(q.x - prev.x);
  } catch (const Error& e) {
    cell.ok = false;
    cell.error = e.kind() + ": " + e.what();
  }
  return cell;
}

ObjectiveSurface optimize_magnetization(const SwimmerParams& base,
                                        const OptimizeOptions& options) {
  base.validate();
  if (options.resolution < 8) {
    throw InvalidArgumentError("optimization grid resolution must be >= 8");
  }
  for (double v : {options.c1.lo, options.c1.hi, options.c2.lo, options.c2.hi}) {
    if (!std::isfinite(v)) throw InvalidArgumentError("ranges must be finite");
  }
  if (!(options.c1.hi > options.c1.lo) || !(options.c2.hi > options.c2.lo)) {
    throw InvalidArgumentError("ranges must satisfy hi > lo");
  }
  const ControlSignal signal =
      options.signal ? *options.signal : make_const_plus_sine(1.0, kTwoPi, 0.0);

  ObjectiveSurface surface;
  surface.c1_axis = axis(options.c1, options.resolution);
  surface.c2_axis = axis(options.c2, options.resolution);
  const std::size_t n2 = surface.c2_axis.size();
  surface.cells.resize(surface.c1_axis.size() * n2);

  for (double c1 : surface.c1_axis) {
    const double c2 = options.feasible_ratio * c1;
    if (c2 >= options.c2.lo && c2 <= options.c2.hi) {
      ObjectiveCell cell;
      cell.c1 = c1;
      cell.c2 = c2;
      surface.feasible_line.push_back(cell);
    }
  }

  const std::size_t grid_cells = surface.cells.size();
  parallel_for(grid_cells + surface.feasible_line.size(), options.threads,
               [&](std::size_t k) {
                 ObjectiveCell& slot = k < grid_cells
                                           ? surface.cells[k]
                                           : surface.feasible_line[k - grid_cells];
                 const double c1 = k < grid_cells ? surface.c1_axis[k / n2] : slot.c1;
                 const double c2 = k < grid_cells ? surface.c2_axis[k % n2] : slot.c2;
                 slot = evaluate_magnetization(base, c1, c2, signal,
                                               options.period, options.cycles,
                                               options.steps_per_unit);
                 slot.feasible = on_ratio(c1, c2, options.feasible_ratio);
               });

  surface.argmax_first = argmax(surface.cells, &ObjectiveCell::first_cycle_dx);
  surface.argmax_steady = argmax(surface.cells, &ObjectiveCell::steady_cycle_dx);
  if (!surface.feasible_line.empty()) {
    surface.feasible_best =
        argmax(surface.feasible_line, &ObjectiveCell::first_cycle_dx);
  }
  return surface;
}

double single_link_rotational_drag(const SwimmerParams& params) {
  params.validate();
  const double len = params.link_length;
  return params.drag_normal * len * len * len / 12.0;
}

double single_link_torque_gain(const SwimmerParams& params, Link link,
                               double field) {
  params.validate();
  return params.link_volume *
         magnetization_world(params, link, 0.0).norm() * std::abs(field);
}

double turning_time_analytic(double rate, double delta) {
  if (!(rate > 0.0)) throw InvalidArgumentError("turning rate must be > 0");
  return std::log(1.0 / std::tan(0.5 * delta)) / rate;
}

double turning_time(double drag_rotational, double torque_gain, double delta,
                    double step) {
  if (!(drag_rotational > 0.0) || !std::isfinite(drag_rotational)) {
    throw InvalidArgumentError("rotational drag must be > 0");
  }
  if (!(torque_gain > 0.0) || !std::isfinite(torque_gain)) {
    throw InvalidArgumentError("torque gain must be > 0");
  }
  if (!(delta > 0.0 && delta <= 0.5 * kPi)) {
    throw InvalidArgumentError("delta must lie in (0, pi/2]");
  }
  if (!(step > 0.0)) throw InvalidArgumentError("step must be > 0");
  const double rate = torque_gain / drag_rotational;
  auto f = [rate](double th) { return -rate * std::sin(th); };
  auto rk4 = [&](double th, double h) {
    const double k1 = f(th);
    const double k2 = f(th + 0.5 * h * k1);
    const double k3 = f(th + 0.5 * h * k2);
    const double k4 = f(th + h * k3);
    return th + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };

  double theta = 0.5 * kPi;
  if (theta <= delta) return 0.0;
  double t = 0.0;
  // theta decays monotonically to 0 and never reaches it, so the loop ends.
  const long max_steps = static_cast<long>(1e9);
  for (long i = 0; i < max_steps; ++i) {
    const double next = rk4(theta, step);
    if (next <= delta) {
      double lo = 0.0, hi = step;
      for (int b = 0; b < 200 && hi - lo > 1e-15 * std::max(1.0, t); ++b) {
        const double mid = 0.5 * (lo + hi);
        (rk4(theta, mid) <= delta ? hi : lo) = mid;
      }
      return t + 0.5 * (lo + hi);
    }
    theta = next;
    t += step;
  }
  throw NonConvergenceError("turning-time integration did not reach delta");
}

}  // namespace magswim
