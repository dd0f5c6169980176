#include <gtest/gtest.h>

#include <sstream>

#include "magswim/csv.h"
#include "magswim/errors.h"
#include "magswim/serialization.h"

namespace {

using namespace magswim;

template <typename Fn>
std::string config_error_message(Fn&& fn) {
  try {
    fn();
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

TEST(SwimmerJson, RoundTripAndDefaults) {
  SwimmerParams p;
  p.link_length = 1.25;
  p.magnetization = {0.5, -1.0, 0.1, 0.0};
  const Json j = to_json(p);
  EXPECT_EQ(swimmer_from_json(j), p);
  EXPECT_EQ(to_json(swimmer_from_json(j)), j);
  EXPECT_EQ(swimmer_from_json(Json::object()), SwimmerParams{});
}

TEST(SwimmerJson, StrictKeys) {
  const std::string msg = config_error_message(
      [] { swimmer_from_json(Json{{"link_lenght", 2.0}}, "swimmer"); });
  EXPECT_NE(msg.find("swimmer.link_lenght"), std::string::npos);
  EXPECT_NE(msg.find("unknown key"), std::string::npos);
  EXPECT_NE(config_error_message([] {
              swimmer_from_json(Json{{"link_length", "long"}});
            }).find("expected a number"),
            std::string::npos);
  EXPECT_NE(config_error_message([] {
              swimmer_from_json(Json{{"magnetization", {1, 2}}});
            }).find("magnetization"),
            std::string::npos);
  EXPECT_FALSE(config_error_message([] {
                 swimmer_from_json(Json{{"link_length", -1.0}});
               }).empty());
}

TEST(SignalJson, RoundTripsEveryArm) {
  Sampled table;
  table.times = {0.0, 0.5, 1.0};
  table.values = {{1, 0}, {NAN, NAN}, {1, 0}};
  table.excluded = {false, true, false};
  table.periodic = true;
  const ControlSignal base = make_const_plus_sine(0.8, 3.0, 0.25);
  const std::vector<ControlSignal> signals = {
      base, make_rotating(base, 0.3), make_schedule({{1.0, base}, {2.0, make_rotating(base, 0.1)}}),
      ControlSignal(table)};
  for (const ControlSignal& s : signals) {
    const Json j = to_json(s);
    const ControlSignal back = signal_from_json(Json::parse(j.dump()));
    EXPECT_EQ(to_json(back).dump(), j.dump());
    for (double t : {0.0, 0.2, 0.9}) {
      const FieldVector a = s(t), b = back(t);
      if (std::isnan(a.bx)) continue;
      EXPECT_EQ(a, b);
    }
  }
}

TEST(SignalJson, Errors) {
  EXPECT_NE(config_error_message([] {
              signal_from_json(Json{{"type", "square"}});
            }).find("signal.type"),
            std::string::npos);
  EXPECT_NE(config_error_message([] {
              signal_from_json(Json{{"type", "const_plus_sine"}, {"omega", 0.0}});
            }).find("omega"),
            std::string::npos);
  EXPECT_NE(config_error_message([] {
              signal_from_json(Json{{"type", "schedule"},
                                    {"segments", {{{"duration", 1.0}}}}});
            }).find("signal.segments[0].signal"),
            std::string::npos);
  EXPECT_NE(config_error_message([] {
              signal_from_json(Json{{"type", "rotating"},
                                    {"base", {{"type", "const_plus_sine"}, {"x", 1}}},
                                    {"slow_rate", 0.1}});
            }).find("signal.base.x"),
            std::string::npos);
}

TEST(LoopJson, RoundTrip) {
  const std::vector<ShapeLoop> loops = {
      straight_crossing_loop(), offset_ellipse_loop(),
      SampledLoop{{{0, 0}, {1, 0}, {1, 1}, {0, 0}}, 2.0}};
  for (const ShapeLoop& loop : loops) {
    const Json j = to_json(loop);
    EXPECT_EQ(to_json(loop_from_json(Json::parse(j.dump()))).dump(), j.dump());
  }
  EXPECT_THROW(loop_from_json(Json{{"type", "sampled_loop"},
                                   {"points", {{0, 0}, {1, 0}, {1, 1}}}}),
               ConfigError);
}

TEST(BoundsJson, RoundTrip) {
  const GridBounds b{-1, 2, -3, 4};
  const GridBounds back = bounds_from_json(to_json(b));
  EXPECT_EQ(back.theta1_min, -1);
  EXPECT_EQ(back.theta2_max, 4);
  EXPECT_THROW(bounds_from_json(Json{1, 0, 0, 1}), ConfigError);
}

TEST(Csv, DoublesRoundTrip) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-300, 6.02214076e23, 0.0}) {
    EXPECT_EQ(std::stod(format_double(v)), v);
  }
  EXPECT_EQ(format_double(NAN), "nan");
  EXPECT_EQ(format_double(-INFINITY), "-inf");
}

TEST(Csv, TrajectorySchema) {
  Trajectory t;
  t.times = {0.0, 0.5};
  t.states = {{1, 2, 3, 4}, {5, 6, 7, 8}};
  t.controls = {{0.1, 0.2}, {0.3, 0.4}};
  std::ostringstream os;
  write_trajectory_csv(os, t);
  EXPECT_EQ(os.str(),
            "t,x,y,theta1,theta2,bx,by\n"
            "0,1,2,3,4,0.10000000000000001,0.20000000000000001\n"
            "0.5,5,6,7,8,0.29999999999999999,0.40000000000000002\n");
}

TEST(Csv, ControlSchemaRequiresTable) {
  std::ostringstream os;
  EXPECT_THROW(write_control_csv(os, make_const_plus_sine(1, 1, 0)), InvalidArgumentError);
  Sampled table;
  table.times = {0.0, 1.0};
  table.values = {{1, 0}, {NAN, 0}};
  table.excluded = {false, true};
  write_control_csv(os, ControlSignal(table));
  EXPECT_EQ(os.str(), "t,bx,by,excluded\n0,1,0,0\n1,nan,0,1\n");
}

}  // namespace
