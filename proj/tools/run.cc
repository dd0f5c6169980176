#include "run.h"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "magswim/csv.h"
#include "magswim/errors.h"

namespace magswim::cli {
namespace {

namespace fs = std::filesystem;

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error("IoError", message) {}
};

// Collects the files of one run; each is written in full before the next.
class Outputs {
 public:
  explicit Outputs(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError(dir_.string() + ": " + ec.message());
  }

  void write(const std::string& name, const std::function<void(std::ostream&)>& body) {
    const fs::path path = dir_ / name;
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError(path.string() + ": cannot open for writing");
    body(os);
    os.flush();
    if (!os) throw IoError(path.string() + ": write failed");
    written_.push_back(path);
  }

  void json(const std::string& name, const Json& j) {
    write(name, [&](std::ostream& os) { os << j.dump(2) << '\n'; });
  }

  std::vector<fs::path> written() const { return written_; }

 private:
  fs::path dir_;
  std::vector<fs::path> written_;
};

Json cell_json(const ObjectiveCell& c) {
  return {{"c1", c.c1},
          {"c2", c.c2},
          {"first_cycle_dx", c.first_cycle_dx},
          {"steady_cycle_dx", c.steady_cycle_dx}};
}

void simulate(const ExperimentConfig& config, Outputs& out) {
  const SimulateConfig& c = *config.simulate;
  const Trajectory traj = rollout(config.swimmer, c.signal, c.initial_state, c.duration,
                                  c.steps_per_unit);
  out.write("trajectory.csv", [&](std::ostream& os) { write_trajectory_csv(os, traj); });
  if (c.period) {
    const auto cycles = per_cycle_summary(traj, *c.period);
    out.write("cycles.csv", [&](std::ostream& os) { write_cycle_csv(os, cycles); });
  }
}

void field(const ExperimentConfig& config, const RunOptions& options, Outputs& out) {
  const FieldConfig& c = *config.field;
  const CurvatureField f =
      curvature_field(config.swimmer, c.bounds, c.resolution, options.threads);
  out.write("field.csv", [&](std::ostream& os) { write_field_csv(os, f); });
}

void invert(const ExperimentConfig& config, Outputs& out) {
  const InvertConfig& c = *config.invert;
  const ControlSignal raw = loop_to_control(config.swimmer, c.loop, c.inversion);
  if (!c.regularize) {
    out.write("control.csv", [&](std::ostream& os) { write_control_csv(os, raw); });
    return;
  }
  const double cutoff = c.cutoff.value_or(2.0 * kTwoPi / loop_period(c.loop));
  const ControlSignal reg = regularize_control(raw, cutoff);
  out.write("control_raw.csv", [&](std::ostream& os) { write_control_csv(os, raw); });
  out.write("control.csv", [&](std::ostream& os) { write_control_csv(os, reg); });
}

void stability(const ExperimentConfig& config, const RunOptions& options, Outputs& out) {
  const StabilityConfig& c = *config.stability;
  const StrobeResult r =
      find_limit_cycle(config.swimmer, c.signal, c.period, c.guess, c.limit_cycle);
  Json summary = to_json(r);
  if (c.basin_enabled) {
    BasinOptions opts = c.basin;
    opts.threads = options.threads;
    const BasinMap map =
        basin_sample(config.swimmer, c.signal, c.period, r.fixed_point, opts);
    summary["basin_converged_fraction"] = map.converged_fraction();
    out.write("basin.csv", [&](std::ostream& os) { write_basin_csv(os, map); });
  }
  out.json("limit_cycle.json", summary);
}

void optimize(const ExperimentConfig& config, const RunOptions& options, Outputs& out) {
  OptimizeOptions opts = config.optimize->options;
  opts.threads = options.threads;
  const ObjectiveSurface s = optimize_magnetization(config.swimmer, opts);
  out.write("objective.csv", [&](std::ostream& os) { write_objective_csv(os, s); });
  Json summary = {{"argmax_first_cycle", cell_json(s.cells[s.argmax_first])},
                  {"argmax_steady_cycle", cell_json(s.cells[s.argmax_steady])},
                  {"feasible_ratio", opts.feasible_ratio}};
  summary["feasible_best"] =
      s.feasible_line.empty() ? Json(nullptr) : cell_json(s.feasible_line[s.feasible_best]);
  out.json("optimum.json", summary);
}

void turning_time(const ExperimentConfig& config, Outputs& out) {
  const TurningTimeConfig& c = *config.turning_time;
  std::vector<double> rates = c.rates;
  if (!c.fields.empty()) {
    const Link link = c.link == 1 ? Link::kFirst : Link::kSecond;
    const double drag = single_link_rotational_drag(config.swimmer);
    rates.clear();
    for (double b : c.fields) {
      rates.push_back(single_link_torque_gain(config.swimmer, link, b) / drag);
    }
  }
  std::vector<TurningRow> rows;
  for (double k : rates) {
    rows.push_back({k, magswim::turning_time(1.0, k, c.delta, c.step),
                    turning_time_analytic(k, c.delta)});
  }
  out.write("turning.csv", [&](std::ostream& os) { write_turning_csv(os, rows); });
}

void primitive(const ExperimentConfig& config, Outputs& out) {
  const PrimitiveConfig& c = *config.primitive;
  const double period = kTwoPi / c.omega;
  std::optional<ControlSignal> signal;
  std::vector<Leg> legs;
  double duration = c.duration;
  if (c.kind == "translate") {
    signal = translate_signal(c.b0, c.omega, c.heading);
  } else if (c.kind == "rectangle") {
    signal = rectangle_schedule(c.b0, c.omega, c.switch_times);
    double prev = 0.0;
    for (int i = 0; i < 4; ++i) {
      legs.push_back({i * 0.5 * kPi, c.switch_times[i] - prev});
      prev = c.switch_times[i];
    }
    duration = c.switch_times[3];
  } else if (c.kind == "headings") {
    legs = c.legs;
    signal = heading_schedule(c.b0, c.omega, legs);
    duration = 0.0;
    for (const Leg& leg : legs) duration += leg.duration;
  } else {
    const double slow = c.omega_slow.value_or(c.omega / 10.0);
    signal = turn_in_place_signal(c.b0, c.omega, slow);
    duration = std::max(c.settle_periods * period, kTwoPi / slow) + kTwoPi / slow;
    const TurnReport r = evaluate_turn_in_place(config.swimmer, c.b0, c.omega, slow,
                                                c.settle_periods, c.steps_per_unit);
    out.json("turn.json", {{"steady_advance", r.steady_advance},
                           {"steady_drift", r.steady_drift},
                           {"advance_from_rest", r.advance_from_rest},
                           {"drift_from_rest", r.drift_from_rest},
                           {"max_excursion", r.max_excursion}});
  }
  const Trajectory traj =
      rollout(config.swimmer, *signal, c.initial_state, duration, c.steps_per_unit);
  out.write("trajectory.csv", [&](std::ostream& os) { write_trajectory_csv(os, traj); });
  if (!legs.empty()) {
    const std::vector<double> h = steady_leg_headings(traj, legs, period, c.settle_periods);
    Json rows = Json::array();
    for (std::size_t i = 0; i < legs.size(); ++i) {
      rows.push_back({{"commanded", legs[i].heading},
                      {"steady", h[i]},
                      {"error", wrap_angle(h[i] - legs[i].heading)}});
    }
    out.json("headings.json", {{"legs", rows}});
  }
}

std::string error_line(const std::string& kind, const std::string& message) {
  const Json j = {{"error", kind}, {"message", message}};
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = {
      "simulate", "field", "invert", "stability", "optimize", "turning-time", "primitive"};
  return names;
}

std::vector<fs::path> execute(const ExperimentConfig& input, const RunOptions& options) {
  if (options.threads < 1) throw ConfigError("--threads: must be >= 1");
  ExperimentConfig config = input;
  const std::string& cmd = options.command;
  // A missing block runs with its documented defaults.
  if (cmd == "simulate" && !config.simulate) config.simulate.emplace();
  if (cmd == "field" && !config.field) config.field.emplace();
  if (cmd == "invert" && !config.invert) config.invert.emplace();
  if (cmd == "stability" && !config.stability) config.stability.emplace();
  if (cmd == "optimize" && !config.optimize) config.optimize.emplace();
  if (cmd == "turning-time" && !config.turning_time) config.turning_time.emplace();
  if (cmd == "primitive" && !config.primitive) config.primitive.emplace();
  if (cmd == "invert" && options.regularize) config.invert->regularize = true;

  Outputs out(options.out_dir);
  out.json("config.json", to_json(config));
  if (cmd == "simulate") {
    simulate(config, out);
  } else if (cmd == "field") {
    field(config, options, out);
  } else if (cmd == "invert") {
    invert(config, out);
  } else if (cmd == "stability") {
    stability(config, options, out);
  } else if (cmd == "optimize") {
    optimize(config, options, out);
  } else if (cmd == "turning-time") {
    turning_time(config, out);
  } else if (cmd == "primitive") {
    primitive(config, out);
  } else {
    throw ConfigError("unknown subcommand '" + cmd + "'");
  }
  return out.written();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Planar two-link magnetic swimmer toolkit", "magswim"};
  app.require_subcommand(1, 1);
  std::string config_path;
  RunOptions options;
  std::string out_dir = ".";
  for (const std::string& name : subcommands()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "JSON manifest")->required();
    sub->add_option("--out", out_dir, "output directory (default .)");
    sub->add_option("--threads", options.threads, "worker threads (default 1)");
    sub->add_flag("--regularize", options.regularize,
                  "filter and normalize the inverted control");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_line("UsageError", e.what()) << '\n';
    return kExitConfig;
  }
  options.command = app.get_subcommands().front()->get_name();
  options.out_dir = out_dir;

  try {
    const std::vector<fs::path> files = execute(load_config(config_path), options);
    for (const fs::path& f : files) out << f.string() << '\n';
    return kExitOk;
  } catch (const ConfigError& e) {
    err << error_line(e.kind(), e.what()) << '\n';
    return kExitConfig;
  } catch (const IoError& e) {
    err << error_line(e.kind(), e.what()) << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << error_line(e.kind(), e.what()) << '\n';
    return kExitNumerical;
  } catch (const std::exception& e) {
    err << error_line("InternalError", e.what()) << '\n';
    return kExitNumerical;
  }
}

}  // namespace magswim::cli
