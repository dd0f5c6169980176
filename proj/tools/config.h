#ifndef MAGSWIM_TOOLS_CONFIG_H_
#define MAGSWIM_TOOLS_CONFIG_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "magswim/design.h"
#include "magswim/geom.h"
#include "magswim/model.h"
#include "magswim/primitives.h"
#include "magswim/serialization.h"
#include "magswim/signal.h"
#include "magswim/sim.h"
#include "magswim/stability.h"

namespace magswim::cli {

// Every block below lists its JSON keys with their defaults. Angles are in
// radians, times in the swimmer's time unit.

// "simulate": rollout from `initial_state` under `signal`.
//   signal         const_plus_sine {1, 2 pi, 0}
//   initial_state  [x, y, theta1, theta2] = [0, 0, 0, 0]
//   duration       10
//   steps_per_unit 2000
//   period         absent; when set, cycles.csv holds per-period deltas
struct SimulateConfig {
  ControlSignal signal = make_const_plus_sine(1.0, kTwoPi, 0.0);
  State initial_state{};
  double duration = 10.0;
  int steps_per_unit = kDefaultStepsPerUnit;
  std::optional<double> period;
};

// "field": curl J on a square node grid.
//   bounds     [theta1_min, theta1_max, theta2_min, theta2_max] = [-pi, 2pi, -pi, 2pi]
//   resolution 256
struct FieldConfig {
  GridBounds bounds{};
  int resolution = 256;
};

// "invert": pointwise control for a shape loop.
//   loop                  phased_sine {0.35, -1.817, 0, 0.53, -0.7186, 0, 2 pi}
//   samples               2048
//   exclusion_condition   100
//   max_excluded_fraction 0.2
//   regularize            false (the --regularize flag forces true)
//   cutoff                2 * 2 pi / loop period
struct InvertConfig {
  ShapeLoop loop = straight_crossing_loop();
  InversionOptions inversion{};
  bool regularize = false;
  std::optional<double> cutoff;
};

// "stability": strobe-map fixed point and basin sampling.
//   signal            const_plus_sine {1, 2 pi, 0}
//   period            1
//   guess             [0, 0]
//   phase             0
//   steps_per_period  2000
//   tolerance         1e-10
//   max_iterations    200
//   fd_step           1e-6
//   basin             {enabled true, resolution 17, lower -pi, upper pi,
//                      cycles 40, convergence_distance 1e-6}
struct StabilityConfig {
  ControlSignal signal = make_const_plus_sine(1.0, kTwoPi, 0.0);
  double period = 1.0;
  Angles guess = Angles::Zero();
  LimitCycleOptions limit_cycle{};
  bool basin_enabled = true;
  BasinOptions basin{};
};

// "optimize": grid search over tangential magnetizations (c1, c2).
//   c1 [0.25, 2], c2 [0.25, 4], resolution 16
//   signal const_plus_sine {1, 2 pi, 0}, period 1, cycles 10
//   steps_per_unit 2000, feasible_ratio 2
struct OptimizeConfig {
  OptimizeOptions options{};
};

// "turning_time": single-link alignment time against its closed form.
//   rates  [1, 2, 4, 8]   alignment rates k directly, or
//   fields [..] + link    k = V |M| B / (xi_n L^3 / 12) from the swimmer,
//                         link 1 or 2 (default 1)
//   delta  0.05
//   step   1e-3
struct TurningTimeConfig {
  std::vector<double> rates{1.0, 2.0, 4.0, 8.0};
  std::vector<double> fields;
  int link = 1;
  double delta = 0.05;
  double step = 1e-3;
};

// "primitive": motion primitives.
//   kind           translate | rectangle | turn | headings (default translate)
//   b0 1, omega 2 pi
//   heading        0 (translate)
//   duration       10 (translate)
//   switch_times   [15, 30, 45, 60] (rectangle)
//   omega_slow     omega / 10 (turn)
//   legs           [{heading, duration}] (headings; required for that kind)
//   initial_state  [0, 0, 0, 0]
//   steps_per_unit 2000
//   settle_periods 10
struct PrimitiveConfig {
  std::string kind = "translate";
  double b0 = 1.0;
  double omega = kTwoPi;
  double heading = 0.0;
  double duration = 10.0;
  std::array<double, 4> switch_times{15.0, 30.0, 45.0, 60.0};
  std::optional<double> omega_slow;
  std::vector<Leg> legs;
  State initial_state{};
  int steps_per_unit = kDefaultStepsPerUnit;
  int settle_periods = kDefaultSettlePeriods;
};

// One manifest per run. Top-level keys: description (free text), swimmer,
// and one optional block per subcommand; anything else is rejected.
struct ExperimentConfig {
  std::string description;
  SwimmerParams swimmer{};
  std::optional<SimulateConfig> simulate;
  std::optional<FieldConfig> field;
  std::optional<InvertConfig> invert;
  std::optional<StabilityConfig> stability;
  std::optional<OptimizeConfig> optimize;
  std::optional<TurningTimeConfig> turning_time;
  std::optional<PrimitiveConfig> primitive;
};

// Throws ConfigError("path.key: reason").
ExperimentConfig config_from_json(const Json& j);
ExperimentConfig load_config(const std::string& path);

// Fully resolved form: defaults are written out explicitly, so parsing the
// result gives back an equal configuration.
Json to_json(const ExperimentConfig& config);

}  // namespace magswim::cli

#endif  // MAGSWIM_TOOLS_CONFIG_H_
