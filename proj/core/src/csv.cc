#include "magswim/csv.h"

#include <cmath>
#include <cstdio>

#include "magswim/errors.h"

namespace magswim {
namespace {

void row(std::ostream& os, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) os << ',';
    os << format_double(v);
    first = false;
  }
  os << '\n';
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "t,x,y,theta1,theta2,bx,by\n";
  for (std::size_t i = 0; i < traj.size(); ++i) {
    const State& s = traj.states[i];
    const FieldVector& u = traj.controls[i];
    row(os, {traj.times[i], s.x, s.y, s.theta1, s.theta2, u.bx, u.by});
  }
}

void write_cycle_csv(std::ostream& os, const std::vector<CycleDelta>& cycles) {
  os << "cycle,dx,dy,dtheta1,dtheta2\n";
  for (const CycleDelta& c : cycles) {
    os << c.cycle << ',';
    row(os, {c.dx, c.dy, c.dtheta1, c.dtheta2});
  }
}

void write_field_csv(std::ostream& os, const CurvatureField& field) {
  os << "theta1,theta2,curl_x,curl_y,masked\n";
  const int n = field.resolution();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      os << format_double(field.theta1(i)) << ',' << format_double(field.theta2(j))
         << ',' << format_double(field.curl_x(i, j)) << ','
         << format_double(field.curl_y(i, j)) << ',' << (field.masked(i, j) ? 1 : 0)
         << '\n';
    }
  }
}

void write_control_csv(std::ostream& os, const ControlSignal& signal) {
  const auto* table = std::get_if<Sampled>(&signal.variant());
  if (table == nullptr) {
    throw InvalidArgumentError("control CSV needs a sampled signal");
  }
  os << "t,bx,by,excluded\n";
  for (std::size_t i = 0; i < table->times.size(); ++i) {
    const FieldVector& u = table->values[i];
    os << format_double(table->times[i]) << ',' << format_double(u.bx) << ','
       << format_double(u.by) << ',' << (signal.excluded_at(i) ? 1 : 0) << '\n';
  }
}

void write_basin_csv(std::ostream& os, const BasinMap& basin) {
  os << "theta1_0,theta2_0,final_distance,converged\n";
  for (const BasinCell& c : basin.cells) {
    os << format_double(c.theta0.x()) << ',' << format_double(c.theta0.y()) << ','
       << format_double(c.final_distance) << ',' << (c.converged ? 1 : 0) << '\n';
  }
}

void write_objective_csv(std::ostream& os, const ObjectiveSurface& surface) {
  os << "c1,c2,first_cycle_dx,steady_cycle_dx\n";
  for (const ObjectiveCell& c : surface.cells) {
    const double nan = std::nan("");
    row(os, {c.c1, c.c2, c.ok ? c.first_cycle_dx : nan,
             c.ok ? c.steady_cycle_dx : nan});
  }
}

void write_turning_csv(std::ostream& os, const std::vector<TurningRow>& rows) {
  os << "k,time_numeric,time_analytic\n";
  for (const TurningRow& r : rows) row(os, {r.rate, r.time_numeric, r.time_analytic});
}

}  // namespace magswim
