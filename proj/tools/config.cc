#include "config.h"

#include <cmath>
#include <fstream>
#include <sstream>

#include "magswim/errors.h"

namespace magswim::cli {
namespace {

const ControlSignal kDefaultSignal = make_const_plus_sine(1.0, kTwoPi, 0.0);

void require(bool ok, const JsonObjectReader& r, const std::string& key,
             const std::string& reason) {
  if (!ok) config_error(r.child_path(key), reason);
}

double positive(JsonObjectReader& r, const std::string& key, double fallback) {
  const double v = r.number(key, fallback);
  require(std::isfinite(v) && v > 0.0, r, key, "must be a finite number > 0");
  return v;
}

int at_least(JsonObjectReader& r, const std::string& key, int fallback, int lo) {
  const int v = r.integer(key, fallback);
  require(v >= lo, r, key, "must be an integer >= " + std::to_string(lo));
  return v;
}

State state_from(JsonObjectReader& r, const std::string& key, const State& fallback) {
  const std::vector<double> v =
      r.numbers(key, {fallback.x, fallback.y, fallback.theta1, fallback.theta2});
  require(v.size() == 4, r, key, "expected [x, y, theta1, theta2]");
  for (double c : v) require(std::isfinite(c), r, key, "entries must be finite");
  return {v[0], v[1], v[2], v[3]};
}

Json state_json(const State& s) {
  return Json::array({s.x, s.y, s.theta1, s.theta2});
}

ControlSignal signal_or(JsonObjectReader& r, const std::string& key,
                        const ControlSignal& fallback) {
  const Json* v = r.optional(key);
  return v ? signal_from_json(*v, r.child_path(key)) : fallback;
}

Range range_from(JsonObjectReader& r, const std::string& key, Range fallback) {
  const std::vector<double> v = r.numbers(key, {fallback.lo, fallback.hi});
  require(v.size() == 2, r, key, "expected [lo, hi]");
  require(std::isfinite(v[0]) && std::isfinite(v[1]) && v[0] > 0.0 && v[1] > v[0], r,
          key, "expected 0 < lo < hi");
  return {v[0], v[1]};
}

// ---------------------------------------------------------------------------

SimulateConfig simulate_from(const Json& j, const std::string& path) {
  JsonObjectReader r(j, path);
  SimulateConfig c;
  c.signal = signal_or(r, "signal", c.signal);
  c.initial_state = state_from(r, "initial_state", c.initial_state);
  c.duration = positive(r, "duration", c.duration);
  c.steps_per_unit = at_least(r, "steps_per_unit", c.steps_per_unit, kMinStepsPerUnit);
  if (r.has("period")) c.period = positive(r, "period", 1.0);
  r.finish();
  return c;
}

Json to_json(const SimulateConfig& c) {
  Json j = {{"signal", to_json(c.signal)},
            {"initial_state", state_json(c.initial_state)},
            {"duration", c.duration},
            {"steps_per_unit", c.steps_per_unit}};
  if (c.period) j["period"] = *c.period;
  return j;
}

FieldConfig field_from(const Json& j, const std::string& path) {
  JsonObjectReader r(j, path);
  FieldConfig c;
  if (const Json* v = r.optional("bounds")) {
    c.bounds = bounds_from_json(*v, r.child_path("bounds"));
  }
  c.resolution = at_least(r, "resolution", c.resolution, kMinFieldResolution);
  r.finish();
  return c;
}

Json to_json(const FieldConfig& c) {
  return {{"bounds", to_json(c.bounds)}, {"resolution", c.resolution}};
}

InvertConfig invert_from(const Json& j, const std::string& path) {
  JsonObjectReader r(j, path);
  InvertConfig c;
  if (const Json* v = r.optional("loop")) c.loop = loop_from_json(*v, r.child_path("loop"));
  c.inversion.samples = at_least(r, "samples", c.inversion.samples, 16);
  c.inversion.exclusion_condition =
      positive(r, "exclusion_condition", c.inversion.exclusion_condition);
  c.inversion.max_excluded_fraction =
      r.number("max_excluded_fraction", c.inversion.max_excluded_fraction);
  require(c.inversion.max_excluded_fraction >= 0.0 &&
              c.inversion.max_excluded_fraction <= 1.0,
          r, "max_excluded_fraction", "must lie in [0, 1]");
  c.regularize = r.boolean("regularize", c.regularize);
  if (r.has("cutoff")) c.cutoff = positive(r, "cutoff", 1.0);
  r.finish();
  return c;
}

Json to_json(const InvertConfig& c) {
  Json j = {{"loop", to_json(c.loop)},
            {"samples", c.inversion.samples},
            {"exclusion_condition", c.inversion.exclusion_condition},
            {"max_excluded_fraction", c.inversion.max_excluded_fraction},
            {"regularize", c.regularize}};
  if (c.cutoff) j["cutoff"] = *c.cutoff;
  return j;
}

void basin_from(const Json& j, const std::string& path, StabilityConfig& c) {
  JsonObjectReader r(j, path);
  c.basin_enabled = r.boolean("enabled", c.basin_enabled);
  c.basin.resolution = at_least(r, "resolution", c.basin.resolution, 1);
  c.basin.lower = r.number("lower", c.basin.lower);
  c.basin.upper = r.number("upper", c.basin.upper);
  require(std::isfinite(c.basin.lower) && std::isfinite(c.basin.upper) &&
              c.basin.upper >= c.basin.lower,
          r, "upper", "expected finite lower <= upper");
  c.basin.cycles = at_least(r, "cycles", c.basin.cycles, 1);
  c.basin.convergence_distance =
      positive(r, "convergence_distance", c.basin.convergence_distance);
  r.finish();
}

StabilityConfig stability_from(const Json& j, const std::string& path) {
  JsonObjectReader r(j, path);
  StabilityConfig c;
  c.signal = signal_or(r, "signal", c.signal);
  c.period = positive(r, "period", c.period);
  const std::vector<double> g = r.numbers("guess", {0.0, 0.0});
  require(g.size() == 2, r, "guess", "expected [theta1, theta2]");
  c.guess = {g[0], g[1]};
  LimitCycleOptions& lc = c.limit_cycle;
  lc.strobe.phase = r.number("phase", lc.strobe.phase);
  lc.strobe.steps_per_period = at_least(r, "steps_per_period", lc.strobe.steps_per_period, 4);
  lc.tolerance = positive(r, "tolerance", lc.tolerance);
  lc.max_iterations = at_least(r, "max_iterations", lc.max_iterations, 1);
  lc.fd_step = positive(r, "fd_step", lc.fd_step);
  c.basin.strobe = lc.strobe;
  if (const Json* v = r.optional("basin")) basin_from(*v, r.child_path("basin"), c);
  r.finish();
  return c;
}

Json to_json(const StabilityConfig& c) {
  const LimitCycleOptions& lc = c.limit_cycle;
  return {{"signal", to_json(c.signal)},
          {"period", c.period},
          {"guess", Json::array({c.guess[0], c.guess[1]})},
          {"phase", lc.strobe.phase},
          {"steps_per_period", lc.strobe.steps_per_period},
          {"tolerance", lc.tolerance},
          {"max_iterations", lc.max_iterations},
          {"fd_step", lc.fd_step},
          {"basin",
           {{"enabled", c.basin_enabled},
            {"resolution", c.basin.resolution},
            {"lower", c.basin.lower},
            {"upper", c.basin.upper},
            {"cycles", c.basin.cycles},
            {"convergence_distance", c.basin.convergence_distance}}}};
}

OptimizeConfig optimize_from(const Json& j, const std::string& path) {
  JsonObjectReader r(j, path);
  OptimizeConfig c;
  OptimizeOptions& o = c.options;
  o.c1 = range_from(r, "c1", o.c1);
  o.c2 = range_from(r, "c2", o.c2);
  o.resolution = at_least(r, "resolution", o.resolution, 8);
  o.signal = signal_or(r, "signal", kDefaultSignal);
  o.period = positive(r, "period", o.period);
  o.cycles = at_least(r, "cycles", o.cycles, 1);
  o.steps_per_unit = at_least(r, "steps_per_unit", o.steps_per_unit, kMinStepsPerUnit);
  o.feasible_ratio = positive(r, "feasible_ratio", o.feasible_ratio);
  r.finish();
  return c;
}

Json to_json(const OptimizeConfig& c) {
  const OptimizeOptions& o = c.options;
  return {{"c1", Json::array({o.c1.lo, o.c1.hi})},
          {"c2", Json::array({o.c2.lo, o.c2.hi})},
          {"resolution", o.resolution},
          {"signal", to_json(o.signal.value_or(kDefaultSignal))},
          {"period", o.period},
          {"cycles", o.cycles},
          {"steps_per_unit", o.steps_per_unit},
          {"feasible_ratio", o.feasible_ratio}};
}

TurningTimeConfig turning_time_from(const Json& j, const std::string& path) {
  JsonObjectReader r(j, path);
  TurningTimeConfig c;
  require(!(r.has("rates") && r.has("fields")), r, "fields",
          "give either rates or fields, not both");
  if (r.has("fields")) {
    c.fields = r.numbers("fields");
    c.rates.clear();
    require(!c.fields.empty(), r, "fields", "must not be empty");
    for (double b : c.fields) {
      require(std::isfinite(b) && b > 0.0, r, "fields", "entries must be > 0");
    }
  } else {
    c.rates = r.numbers("rates", c.rates);
    require(!c.rates.empty(), r, "rates", "must not be empty");
    for (double k : c.rates) {
      require(std::isfinite(k) && k > 0.0, r, "rates", "entries must be > 0");
    }
  }
  c.link = r.integer("link", c.link);
  require(c.link == 1 || c.link == 2, r, "link", "expected 1 or 2");
  c.delta = r.number("delta", c.delta);
  require(c.delta > 0.0 && c.delta <= kPi / 2, r, "delta", "expected 0 < delta <= pi/2");
  c.step = positive(r, "step", c.step);
  r.finish();
  return c;
}

Json to_json(const TurningTimeConfig& c) {
  Json j = {{"delta", c.delta}, {"step", c.step}, {"link", c.link}};
  if (c.fields.empty()) {
    j["rates"] = c.rates;
  } else {
    j["fields"] = c.fields;
  }
  return j;
}

PrimitiveConfig primitive_from(const Json& j, const std::string& path) {
  JsonObjectReader r(j, path);
  PrimitiveConfig c;
  c.kind = r.string("kind", c.kind);
  require(c.kind == "translate" || c.kind == "rectangle" || c.kind == "turn" ||
              c.kind == "headings",
          r, "kind", "expected translate|rectangle|turn|headings");
  c.b0 = positive(r, "b0", c.b0);
  c.omega = positive(r, "omega", c.omega);
  c.heading = r.number("heading", c.heading);
  c.duration = positive(r, "duration", c.duration);

  const std::vector<double> st = r.numbers(
      "switch_times", {c.switch_times.begin(), c.switch_times.end()});
  require(st.size() == 4, r, "switch_times", "expected [t1, t2, t3, t4]");
  require(0.0 < st[0] && st[0] < st[1] && st[1] < st[2] && st[2] < st[3], r,
          "switch_times", "expected 0 < t1 < t2 < t3 < t4");
  std::copy(st.begin(), st.end(), c.switch_times.begin());

  if (r.has("omega_slow")) {
    c.omega_slow = r.number("omega_slow");
    require(*c.omega_slow > 0.0 && *c.omega_slow < c.omega, r, "omega_slow",
            "expected 0 < omega_slow < omega");
  }

  if (const Json* v = r.optional("legs")) {
    const Json& legs = *v;
    const std::string legs_path = r.child_path("legs");
    if (!legs.is_array() || legs.empty()) config_error(legs_path, "expected a non-empty array");
    for (std::size_t i = 0; i < legs.size(); ++i) {
      JsonObjectReader lr(legs[i], legs_path + "[" + std::to_string(i) + "]");
      Leg leg;
      leg.heading = lr.number("heading");
      leg.duration = positive(lr, "duration", 0.0);
      lr.finish();
      c.legs.push_back(leg);
    }
  }
  require(c.kind != "headings" || !c.legs.empty(), r, "legs",
          "required for kind 'headings'");

  c.initial_state = state_from(r, "initial_state", c.initial_state);
  c.steps_per_unit = at_least(r, "steps_per_unit", c.steps_per_unit, kMinStepsPerUnit);
  c.settle_periods = at_least(r, "settle_periods", c.settle_periods, 0);
  r.finish();
  return c;
}

Json to_json(const PrimitiveConfig& c) {
  Json legs = Json::array();
  for (const Leg& leg : c.legs) {
    legs.push_back({{"heading", leg.heading}, {"duration", leg.duration}});
  }
  Json j = {{"kind", c.kind},
            {"b0", c.b0},
            {"omega", c.omega},
            {"heading", c.heading},
            {"duration", c.duration},
            {"switch_times", c.switch_times},
            {"initial_state", state_json(c.initial_state)},
            {"steps_per_unit", c.steps_per_unit},
            {"settle_periods", c.settle_periods}};
  if (c.omega_slow) j["omega_slow"] = *c.omega_slow;
  if (!legs.empty()) j["legs"] = legs;
  return j;
}

template <typename T, typename Parse>
void block(JsonObjectReader& r, const std::string& key, std::optional<T>& out,
           Parse parse) {
  if (const Json* v = r.optional(key)) out = parse(*v, r.child_path(key));
}

}  // namespace

ExperimentConfig config_from_json(const Json& j) {
  JsonObjectReader r(j, "");
  ExperimentConfig c;
  c.description = r.string("description", "");
  if (const Json* v = r.optional("swimmer")) c.swimmer = swimmer_from_json(*v, "swimmer");
  block(r, "simulate", c.simulate, simulate_from);
  block(r, "field", c.field, field_from);
  block(r, "invert", c.invert, invert_from);
  block(r, "stability", c.stability, stability_from);
  block(r, "optimize", c.optimize, optimize_from);
  block(r, "turning_time", c.turning_time, turning_time_from);
  block(r, "primitive", c.primitive, primitive_from);
  r.finish();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) config_error(path, "cannot open config file");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    config_error(path, std::string("invalid JSON: ") + e.what());
  }
  return config_from_json(j);
}

Json to_json(const ExperimentConfig& c) {
  Json j = {{"swimmer", to_json(c.swimmer)}};
  if (!c.description.empty()) j["description"] = c.description;
  if (c.simulate) j["simulate"] = to_json(*c.simulate);
  if (c.field) j["field"] = to_json(*c.field);
  if (c.invert) j["invert"] = to_json(*c.invert);
  if (c.stability) j["stability"] = to_json(*c.stability);
  if (c.optimize) j["optimize"] = to_json(*c.optimize);
  if (c.turning_time) j["turning_time"] = to_json(*c.turning_time);
  if (c.primitive) j["primitive"] = to_json(*c.primitive);
  return j;
}

}  // namespace magswim::cli
