#include "magswim/stability.h"

#include <algorithm>
#include <cmath>
#include <sstream>


#include "magswim/errors.h"
#include "magswim/parallel.h"
#include "magswim/sim.h"

namespace magswim {
namespace {

void check_period(double period) {
  if (!(std::isfinite(period) && period > 0.0)) {
    throw InvalidArgumentError("forcing period must be > 0");
  }
}

double wrapped_distance(const Angles& a, const Angles& b) {
  return std::hypot(wrap_angle(a[0] - b[0]), wrap_angle(a[1] - b[1]));
}

}  // namespace

Angles strobe_map(const SwimmerParams& params, const ControlSignal& signal,
                  double period, const Angles& theta0,
                  const StrobeOptions& options) {
  params.validate();
  check_period(period);
  if (options.steps_per_period < 1) {
    throw InvalidArgumentError("steps_per_period must be >= 1");
  }
  return integrate_orientation(params, signal, theta0, options.phase, period,
                               options.steps_per_period);
}

std::array<std::complex<double>, 2> eigenvalues_2x2(const Mat2& m) {
  const double half_trace = 0.5 * m.trace();
  const double det = m.determinant();
  const double disc = half_trace * half_trace - det;
  if (disc >= 0.0) {
    const double root = std::sqrt(disc);
    // Avoid cancellation in the smaller root.
    const double big = half_trace >= 0.0 ? half_trace + root : half_trace - root;
    const double small = big != 0.0 ? det / big : half_trace - root;
    return {std::complex<double>(big), std::complex<double>(small)};
  }
  const double im = std::sqrt(-disc);
  return {std::complex<double>(half_trace, im),
          std::complex<double>(half_trace, -im)};
}

Mat2 strobe_jacobian(const SwimmerParams& params, const ControlSignal& signal,
                     double period, const Angles& theta, double h,
                     const StrobeOptions& options) {
  if (!(h > 0.0)) throw InvalidArgumentError("finite-difference step must be > 0");
  Mat2 jac;
  for (int c = 0; c < 2; ++c) {
    Angles e = Angles::Zero();
    e[c] = h;
    jac.col(c) = (strobe_map(params, signal, period, theta + e, options) -
                  strobe_map(params, signal, period, theta - e, options)) /
                 (2.0 * h);
  }
  return jac;
}

StrobeResult find_limit_cycle(const SwimmerParams& params,
                              const ControlSignal& signal, double period,
                              const Angles& guess,
                              const LimitCycleOptions& options) {
  if (!(options.tolerance > 0.0)) {
    throw InvalidArgumentError("tolerance must be > 0");
  }
  StrobeResult result;
  Angles theta = guess;
  double residual = INFINITY;
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    const Angles next = strobe_map(params, signal, period, theta, options.strobe);
    residual = (next - theta).norm();
    theta = next;
    if (residual < options.tolerance) break;
  }
  if (!(residual < options.tolerance)) {
    std::ostringstream os;
    os << "strobe iteration did not converge in " << options.max_iterations
       << " iterations (residual " << residual << ")";
    throw NonConvergenceError(os.str());
  }
  result.fixed_point = theta;
  result.iterations = it + 1;
  result.residual =
      (strobe_map(params, signal, period, theta, options.strobe) - theta).norm();
  result.jacobian = strobe_jacobian(params, signal, period, theta,
                                    options.fd_step, options.strobe);
  result.eigenvalues = eigenvalues_2x2(result.jacobian);
  result.multipliers = {std::abs(result.eigenvalues[0]),
                        std::abs(result.eigenvalues[1])};
  if (result.multipliers[0] < result.multipliers[1]) {
    std::swap(result.multipliers[0], result.multipliers[1]);
    std::swap(result.eigenvalues[0], result.eigenvalues[1]);
  }
  return result;
}

double BasinMap::converged_fraction() const {
  if (cells.empty()) return 0.0;
  const auto n = std::count_if(cells.begin(), cells.end(),
                               [](const BasinCell& c) { return c.converged; });
  return static_cast<double>(n) / static_cast<double>(cells.size());
}

BasinMap basin_sample(const SwimmerParams& params, const ControlSignal& signal,
                      double period, const Angles& reference,
                      const BasinOptions& options) {
  params.validate();
  check_period(period);
  if (options.resolution < 2) {
    throw InvalidArgumentError("basin resolution must be >= 2");
  }
  if (options.cycles < 20) throw InvalidArgumentError("basin needs >= 20 cycles");
  if (!(options.upper > options.lower)) {
    throw InvalidArgumentError("basin bounds must satisfy upper > lower");
  }
  BasinMap map;
  map.reference = reference;
  map.resolution = options.resolution;
  const int n = options.resolution;
  map.cells.resize(static_cast<std::size_t>(n) * n);
  const double h = (options.upper - options.lower) / (n - 1);

  parallel_for(map.cells.size(), options.threads, [&](std::size_t idx) {
    BasinCell& cell = map.cells[idx];
    const int i = static_cast<int>(idx) / n;
    const int j = static_cast<int>(idx) % n;
    cell.theta0 = Angles(options.lower + i * h, options.lower + j * h);
    cell.history.reserve(options.cycles + 1);
    Angles theta = cell.theta0;
    auto record = [&](int k) {
      const double d = wrapped_distance(theta, reference);
      cell.history.push_back(d);
      if (cell.first_converged_cycle < 0 && d < options.convergence_distance) {
        cell.first_converged_cycle = k;
      }
    };
    record(0);
    for (int k = 1; k <= options.cycles; ++k) {
      try {
        theta = strobe_map(params, signal, period, theta, options.strobe);
      } catch (const Error&) {
        theta = Angles::Constant(NAN);
      }
      if (!theta.allFinite()) {
        cell.history.push_back(INFINITY);
        break;
      }
      record(k);
    }
    cell.final_distance = cell.history.back();
    cell.converged = cell.final_distance < options.convergence_distance;
  });
  return map;
}

}  // namespace magswim
