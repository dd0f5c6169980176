#ifndef MAGSWIM_DESIGN_H_
#define MAGSWIM_DESIGN_H_

#include <optional>
#include <string>
#include <vector>

#include "magswim/model.h"
#include "magswim/signal.h"

namespace magswim {

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

struct OptimizeOptions {
  Range c1{0.25, 2.0};
  Range c2{0.25, 4.0};
  int resolution = 16;
  // Defaults to ConstPlusSine{1, 2 pi, 0} with period 1 when unset.
  std::optional<ControlSignal> signal;
  double period = 1.0;
  int cycles = 10;
  int steps_per_unit = 2000;
  double feasible_ratio = 2.0;  // c2 / c1 accepted for fabrication
  int threads = 1;
};

struct ObjectiveCell {
  double c1 = 0.0;
  double c2 = 0.0;
  double first_cycle_dx = 0.0;   // |x(T) - x(0)| from q(0) = 0
  double steady_cycle_dx = 0.0;  // |dx| over the last simulated cycle
  bool feasible = false;         // c2 / c1 equals feasible_ratio
  bool ok = true;
  std::string error;             // set when the rollout failed
};

struct ObjectiveSurface {
  std::vector<double> c1_axis;
  std::vector<double> c2_axis;
  std::vector<ObjectiveCell> cells;  // row-major: c1 outer, c2 inner
  std::size_t argmax_first = 0;      // default criterion
  std::size_t argmax_steady = 0;
  // Best point on the line c2 = feasible_ratio * c1 (sampled at the c1 axis
  // nodes whose image lies inside the c2 range).
  std::vector<ObjectiveCell> feasible_line;
  std::size_t feasible_best = 0;

  const ObjectiveCell& at(std::size_t i, std::size_t j) const {
    return cells[i * c2_axis.size() + j];
  }
};

// Evaluates one (c1, c2) cell: m = (c1, c2, 0, 0) on top of `base`.
ObjectiveCell evaluate_magnetization(const SwimmerParams& base, double c1,
                                     double c2, const ControlSignal& signal,
                                     double period, int cycles,
                                     int steps_per_unit);

// Brute-force grid search over tangential magnetizations.
ObjectiveSurface optimize_magnetization(const SwimmerParams& base,
                                        const OptimizeOptions& options = {});

// Rotational drag of one link about its centre, xi_n L^3 / 12.
double single_link_rotational_drag(const SwimmerParams& params);

// Torque gain V |M| B for one link in a field of magnitude `field`.
double single_link_torque_gain(const SwimmerParams& params, Link link,
                               double field);

// Time for thetadot = -(torque_gain / drag_rotational) sin(theta), started
// perpendicular to the field (theta = pi/2), to reach theta <= delta. Fixed
// step RK4, with the crossing located inside the final step by bisection.
double turning_time(double drag_rotational, double torque_gain, double delta,
                    double step = 1e-3);

// Closed form (1 / rate) ln cot(delta / 2).
double turning_time_analytic(double rate, double delta);

}  // namespace magswim

#endif  // MAGSWIM_DESIGN_H_
