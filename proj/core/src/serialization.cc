#include "magswim/serialization.h"

#include <cmath>
#include <sstream>

#include "magswim/errors.h"

namespace magswim {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

Json vec_json(const Vec2& v) { return Json::array({v.x(), v.y()}); }

Vec2 vec_from(const Json& j, const std::string& path) {
  const std::vector<double> v = json_numbers(j, path);
  if (v.size() != 2) config_error(path, "expected an array of 2 numbers");
  return {v[0], v[1]};
}

// Rethrows library validation failures as config errors at `path`.
template <typename Fn>
auto validated(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const InvalidArgumentError& e) {
    config_error(path, e.what());
  }
}

}  // namespace

void config_error(const std::string& path, const std::string& reason) {
  throw ConfigError(path + ": " + reason);
}

double json_number(const Json& value, const std::string& path) {
  if (!value.is_number()) config_error(path, "expected a number");
  return value.get<double>();
}

std::vector<double> json_numbers(const Json& value, const std::string& path) {
  if (!value.is_array()) config_error(path, "expected an array of numbers");
  std::vector<double> out;
  out.reserve(value.size());
  for (std::size_t i = 0; i < value.size(); ++i) {
    out.push_back(json_number(value[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

// ---------------------------------------------------------------------------

JsonObjectReader::JsonObjectReader(const Json& object, std::string path)
    : object_(object), path_(std::move(path)) {
  if (!object_.is_object()) config_error(path_, "expected an object");
}

bool JsonObjectReader::has(const std::string& key) const {
  return object_.contains(key) && !object_.at(key).is_null();
}

std::string JsonObjectReader::child_path(const std::string& key) const {
  return path_.empty() ? key : path_ + "." + key;
}

const Json& JsonObjectReader::get(const std::string& key) {
  used_.insert(key);
  if (!object_.contains(key)) config_error(child_path(key), "missing required key");
  return object_.at(key);
}

const Json* JsonObjectReader::optional(const std::string& key) {
  used_.insert(key);
  return has(key) ? &object_.at(key) : nullptr;
}

double JsonObjectReader::number(const std::string& key) {
  return json_number(get(key), child_path(key));
}

double JsonObjectReader::number(const std::string& key, double fallback) {
  used_.insert(key);
  return has(key) ? json_number(object_.at(key), child_path(key)) : fallback;
}

int JsonObjectReader::integer(const std::string& key, int fallback) {
  used_.insert(key);
  if (!has(key)) return fallback;
  const Json& v = object_.at(key);
  if (!v.is_number_integer()) config_error(child_path(key), "expected an integer");
  return v.get<int>();
}

bool JsonObjectReader::boolean(const std::string& key, bool fallback) {
  used_.insert(key);
  if (!has(key)) return fallback;
  const Json& v = object_.at(key);
  if (!v.is_boolean()) config_error(child_path(key), "expected a boolean");
  return v.get<bool>();
}

std::string JsonObjectReader::string(const std::string& key,
                                     const std::string& fallback) {
  used_.insert(key);
  if (!has(key)) return fallback;
  const Json& v = object_.at(key);
  if (!v.is_string()) config_error(child_path(key), "expected a string");
  return v.get<std::string>();
}

std::string JsonObjectReader::string(const std::string& key) {
  const Json& v = get(key);
  if (!v.is_string()) config_error(child_path(key), "expected a string");
  return v.get<std::string>();
}

std::vector<double> JsonObjectReader::numbers(const std::string& key) {
  return json_numbers(get(key), child_path(key));
}

std::vector<double> JsonObjectReader::numbers(
    const std::string& key, const std::vector<double>& fallback) {
  used_.insert(key);
  return has(key) ? json_numbers(object_.at(key), child_path(key)) : fallback;
}

void JsonObjectReader::finish() const {
  for (const auto& [key, value] : object_.items()) {
    if (!used_.count(key)) config_error(child_path(key), "unknown key");
  }
}

// ---------------------------------------------------------------------------
// SwimmerParams

Json to_json(const SwimmerParams& p) {
  const Magnetization& m = p.magnetization;
  return {
      {"link_length", p.link_length},
      {"drag_tangential", p.drag_tangential},
      {"drag_normal", p.drag_normal},
      {"link_volume", p.link_volume},
      {"magnetization_scale", p.magnetization_scale},
      {"magnetization",
       Json::array({m.tangential1, m.tangential2, m.normal1, m.normal2})},
  };
}

SwimmerParams swimmer_from_json(const Json& j, const std::string& path) {
  JsonObjectReader r(j, path);
  SwimmerParams p;
  p.link_length = r.number("link_length", p.link_length);
  p.drag_tangential = r.number("drag_tangential", p.drag_tangential);
  p.drag_normal = r.number("drag_normal", p.drag_normal);
  p.link_volume = r.number("link_volume", p.link_volume);
  p.magnetization_scale = r.number("magnetization_scale", p.magnetization_scale);
  if (r.has("magnetization")) {
    const auto m = r.numbers("magnetization");
    if (m.size() != 4) {
      config_error(r.child_path("magnetization"),
                   "expected [m_t1, m_t2, m_n1, m_n2]");
    }
    p.magnetization = {m[0], m[1], m[2], m[3]};
  } else {
    r.numbers("magnetization", {});
  }
  r.finish();
  validated(path, [&] {
    p.validate();
    return 0;
  });
  return p;
}

// ---------------------------------------------------------------------------
// ControlSignal

Json to_json(const ControlSignal& signal) {
  return std::visit(
      Overloaded{
          [](const ConstPlusSine& s) -> Json {
            return {{"type", "const_plus_sine"},
                    {"amplitude", s.amplitude},
                    {"omega", s.omega},
                    {"heading", s.heading}};
          },
          [](const Rotating& s) -> Json {
            return {{"type", "rotating"},
                    {"base", to_json(*s.base)},
                    {"slow_rate", s.slow_rate}};
          },
          [](const Schedule& s) -> Json {
            Json segs = Json::array();
            for (const ScheduleSegment& seg : s.segments) {
              segs.push_back(
                  {{"duration", seg.duration}, {"signal", to_json(*seg.signal)}});
            }
            return {{"type", "schedule"}, {"segments", segs}};
          },
          [](const Sampled& s) -> Json {
            Json values = Json::array();
            for (const FieldVector& v : s.values) {
              values.push_back(Json::array({v.bx, v.by}));
            }
            Json j = {{"type", "sampled"},
                      {"times", s.times},
                      {"values", values},
                      {"interpolation",
                       s.interpolation == Interpolation::kHold ? "hold" : "linear"},
                      {"periodic", s.periodic}};
            if (!s.excluded.empty()) {
              Json flags = Json::array();
              for (bool b : s.excluded) flags.push_back(b);
              j["excluded"] = flags;
            }
            return j;
          },
      },
      signal.variant());
}

ControlSignal signal_from_json(const Json& j, const std::string& path) {
  JsonObjectReader r(j, path);
  const std::string type = r.string("type");
  auto build = [&]() -> ControlSignal {
    if (type == "const_plus_sine") {
      ConstPlusSine s;
      s.amplitude = r.number("amplitude", s.amplitude);
      s.omega = r.number("omega", s.omega);
      s.heading = r.number("heading", s.heading);
      r.finish();
      return validated(path, [&] { return ControlSignal(s); });
    }
    if (type == "rotating") {
      Rotating s;
      s.base = std::make_shared<const ControlSignal>(
          signal_from_json(r.get("base"), r.child_path("base")));
      s.slow_rate = r.number("slow_rate");
      r.finish();
      return validated(path, [&] { return ControlSignal(s); });
    }
    if (type == "schedule") {
      const Json& segs = r.get("segments");
      const std::string seg_path = r.child_path("segments");
      if (!segs.is_array()) config_error(seg_path, "expected an array");
      Schedule s;
      for (std::size_t i = 0; i < segs.size(); ++i) {
        const std::string p = seg_path + "[" + std::to_string(i) + "]";
        JsonObjectReader sr(segs[i], p);
        ScheduleSegment seg;
        seg.duration = sr.number("duration");
        seg.signal = std::make_shared<const ControlSignal>(
            signal_from_json(sr.get("signal"), sr.child_path("signal")));
        sr.finish();
        s.segments.push_back(seg);
      }
      r.finish();
      return validated(path, [&] { return ControlSignal(s); });
    }
    if (type == "sampled") {
      Sampled s;
      s.times = r.numbers("times");
      const Json& values = r.get("values");
      if (!values.is_array()) config_error(r.child_path("values"), "expected an array");
      for (std::size_t i = 0; i < values.size(); ++i) {
        const std::string p = r.child_path("values") + "[" + std::to_string(i) + "]";
        if (!values[i].is_array() || values[i].size() != 2) {
          config_error(p, "expected [bx, by]");
        }
        auto component = [&](const Json& v) {
          // Excluded samples may carry null for a non-finite value.
          return v.is_null() ? std::nan("") : json_number(v, p);
        };
        s.values.push_back({component(values[i][0]), component(values[i][1])});
      }
      const std::string interp = r.string("interpolation", "linear");
      if (interp == "linear") {
        s.interpolation = Interpolation::kLinear;
      } else if (interp == "hold") {
        s.interpolation = Interpolation::kHold;
      } else {
        config_error(r.child_path("interpolation"), "expected linear|hold");
      }
      if (r.has("excluded")) {
        const Json& flags = r.get("excluded");
        if (!flags.is_array()) config_error(r.child_path("excluded"), "expected an array");
        for (const Json& f : flags) {
          if (!f.is_boolean()) config_error(r.child_path("excluded"), "expected booleans");
          s.excluded.push_back(f.get<bool>());
        }
      } else {
        r.boolean("excluded", false);
      }
      s.periodic = r.boolean("periodic", false);
      r.finish();
      return validated(path, [&] { return ControlSignal(std::move(s)); });
    }
    config_error(r.child_path("type"),
                 "unknown signal type '" + type +
                     "' (expected const_plus_sine|rotating|schedule|sampled)");
  };
  return build();
}

// ---------------------------------------------------------------------------
// ShapeLoop

Json to_json(const ShapeLoop& loop) {
  return std::visit(
      Overloaded{
          [](const PhasedSine& l) -> Json {
            return {{"type", "phased_sine"},     {"amplitude1", l.amplitude1},
                    {"phase1", l.phase1},        {"offset1", l.offset1},
                    {"amplitude2", l.amplitude2}, {"phase2", l.phase2},
                    {"offset2", l.offset2},      {"omega", l.omega}};
          },
          [](const RotatedEllipse& l) -> Json {
            return {{"type", "rotated_ellipse"},
                    {"radius1", l.radius1},
                    {"radius2", l.radius2},
                    {"rotation", l.rotation},
                    {"center", Json::array({l.center1, l.center2})},
                    {"omega", l.omega}};
          },
          [](const SampledLoop& l) -> Json {
            Json pts = Json::array();
            for (const Angles& p : l.points) pts.push_back(vec_json(p));
            return {{"type", "sampled_loop"}, {"points", pts}, {"period", l.period}};
          },
      },
      loop);
}

ShapeLoop loop_from_json(const Json& j, const std::string& path) {
  JsonObjectReader r(j, path);
  const std::string type = r.string("type");
  ShapeLoop loop;
  if (type == "phased_sine") {
    PhasedSine l;
    l.amplitude1 = r.number("amplitude1");
    l.phase1 = r.number("phase1", 0.0);
    l.offset1 = r.number("offset1", 0.0);
    l.amplitude2 = r.number("amplitude2");
    l.phase2 = r.number("phase2", 0.0);
    l.offset2 = r.number("offset2", 0.0);
    l.omega = r.number("omega", l.omega);
    loop = l;
  } else if (type == "rotated_ellipse") {
    RotatedEllipse l;
    l.radius1 = r.number("radius1");
    l.radius2 = r.number("radius2");
    l.rotation = r.number("rotation", 0.0);
    const Vec2 c = vec_from(r.get("center"), r.child_path("center"));
    l.center1 = c.x();
    l.center2 = c.y();
    l.omega = r.number("omega", l.omega);
    loop = l;
  } else if (type == "sampled_loop") {
    SampledLoop l;
    const Json& pts = r.get("points");
    if (!pts.is_array()) config_error(r.child_path("points"), "expected an array");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      l.points.push_back(
          vec_from(pts[i], r.child_path("points") + "[" + std::to_string(i) + "]"));
    }
    l.period = r.number("period", 1.0);
    loop = l;
  } else {
    config_error(r.child_path("type"),
                 "unknown loop type '" + type +
                     "' (expected phased_sine|rotated_ellipse|sampled_loop)");
  }
  r.finish();
  validated(path, [&] {
    validate_loop(loop);
    return 0;
  });
  return loop;
}

// ---------------------------------------------------------------------------

Json to_json(const GridBounds& b) {
  return Json::array({b.theta1_min, b.theta1_max, b.theta2_min, b.theta2_max});
}

GridBounds bounds_from_json(const Json& j, const std::string& path) {
  const std::vector<double> v = json_numbers(j, path);
  if (v.size() != 4) {
    config_error(path, "expected [theta1_min, theta1_max, theta2_min, theta2_max]");
  }
  GridBounds b{v[0], v[1], v[2], v[3]};
  if (!(b.theta1_max > b.theta1_min && b.theta2_max > b.theta2_min)) {
    config_error(path, "bounds must satisfy max > min");
  }
  return b;
}

Json to_json(const StrobeResult& r) {
  Json eig = Json::array();
  for (const auto& e : r.eigenvalues) eig.push_back(Json::array({e.real(), e.imag()}));
  return {
      {"fixed_point", vec_json(r.fixed_point)},
      {"multipliers", Json::array({r.multipliers[0], r.multipliers[1]})},
      {"eigenvalues", eig},
      {"jacobian", Json::array({Json::array({r.jacobian(0, 0), r.jacobian(0, 1)}),
                                Json::array({r.jacobian(1, 0), r.jacobian(1, 1)})})},
      {"residual", r.residual},
      {"iterations", r.iterations},
  };
}

}  // namespace magswim
