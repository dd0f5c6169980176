#ifndef MAGSWIM_CSV_H_
#define MAGSWIM_CSV_H_

#include <ostream>
#include <string>
#include <vector>

#include "magswim/design.h"
#include "magswim/geom.h"
#include "magswim/signal.h"
#include "magswim/sim.h"
#include "magswim/stability.h"

namespace magswim {

// Shortest form that prints %.17g; "nan", "inf" and "-inf" for non-finite.
std::string format_double(double v);

// t,x,y,theta1,theta2,bx,by
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

// cycle,dx,dy,dtheta1,dtheta2
void write_cycle_csv(std::ostream& os, const std::vector<CycleDelta>& cycles);

// theta1,theta2,curl_x,curl_y,masked
void write_field_csv(std::ostream& os, const CurvatureField& field);

// t,bx,by,excluded (sampled signals only)
void write_control_csv(std::ostream& os, const ControlSignal& signal);

// theta1_0,theta2_0,final_distance,converged
void write_basin_csv(std::ostream& os, const BasinMap& basin);

// c1,c2,first_cycle_dx,steady_cycle_dx
void write_objective_csv(std::ostream& os, const ObjectiveSurface& surface);

struct TurningRow {
  double rate = 0.0;
  double time_numeric = 0.0;
  double time_analytic = 0.0;
};

// k,time_numeric,time_analytic
void write_turning_csv(std::ostream& os, const std::vector<TurningRow>& rows);

}  // namespace magswim

#endif  // MAGSWIM_CSV_H_
