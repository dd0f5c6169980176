#include "magswim/geom.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>


#include "magswim/errors.h"
#include "magswim/parallel.h"

namespace magswim {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_finite(std::initializer_list<double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw InvalidArgumentError(std::string(what) + ": entries must be finite");
    }
  }
}

// Periodic index into a closed polyline with `m` distinct points.
std::size_t wrap_index(long k, std::size_t m) {
  const long mm = static_cast<long>(m);
  return static_cast<std::size_t>(((k % mm) + mm) % mm);
}

struct SampledPosition {
  std::size_t k;  // segment start
  double w;       // fraction along segment
};

SampledPosition locate(const SampledLoop& loop, double t) {
  const std::size_t m = loop.points.size() - 1;
  const double dt = loop.period / static_cast<double>(m);
  double u = std::fmod(t, loop.period);
  if (u < 0.0) u += loop.period;
  double pos = u / dt;
  auto k = static_cast<std::size_t>(std::floor(pos));
  if (k >= m) k = m - 1;
  return {k, pos - static_cast<double>(k)};
}

Angles sampled_node_velocity(const SampledLoop& loop, long k) {
  const std::size_t m = loop.points.size() - 1;
  const double dt = loop.period / static_cast<double>(m);
  return (loop.points[wrap_index(k + 1, m)] - loop.points[wrap_index(k - 1, m)]) /
         (2.0 * dt);
}

std::optional<Mat2> try_local_jacobian(const SwimmerParams& params,
                                       const Angles& theta) {
  const Decomposition d = decompose(params, theta);
  if (!(condition_number(d.orientation) <= kOrientationConditionLimit)) {
    return std::nullopt;
  }
  return d.position * d.orientation.inverse();
}

double signed_area(const std::vector<Angles>& poly) {
  double a = 0.0;
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
    a += poly[i].x() * poly[i + 1].y() - poly[i + 1].x() * poly[i].y();
  }
  return 0.5 * a;
}

bool inside_even_odd(const std::vector<Angles>& poly, double px, double py) {
  bool inside = false;
  for (std::size_t i = 0, n = poly.size(); i + 1 < n; ++i) {
    const Angles& a = poly[i];
    const Angles& b = poly[i + 1];
    if ((a.y() > py) != (b.y() > py)) {
      const double xc = a.x() + (py - a.y()) / (b.y() - a.y()) * (b.x() - a.x());
      if (px < xc) inside = !inside;
    }
  }
  return inside;
}

double distance_to_polyline(const std::vector<Angles>& poly, const Angles& p) {
  double best = INFINITY;
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
    const Vec2 ab = poly[i + 1] - poly[i];
    const double len2 = ab.squaredNorm();
    double s = len2 > 0.0 ? (p - poly[i]).dot(ab) / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    best = std::min(best, (poly[i] + s * ab - p).norm());
  }
  return best;
}

// Single-pole low-pass, bilinear transform prewarped at the cutoff. The
// filter starts in steady state for the first input.
std::vector<double> lowpass(const std::vector<double>& x, double k) {
  const double b0 = k / (1.0 + k);
  const double a1 = (k - 1.0) / (1.0 + k);
  std::vector<double> y(x.size());
  double prev_x = x.front();
  double prev_y = x.front();
  for (std::size_t n = 0; n < x.size(); ++n) {
    y[n] = b0 * (x[n] + prev_x) - a1 * prev_y;
    prev_x = x[n];
    prev_y = y[n];
  }
  return y;
}

std::vector<double> filtfilt(const std::vector<double>& x, double k) {
  std::vector<double> y = lowpass(x, k);
  std::reverse(y.begin(), y.end());
  y = lowpass(y, k);
  std::reverse(y.begin(), y.end());
  return y;
}

std::vector<double> zero_phase_periodic(const std::vector<double>& x,
                                        double k, std::size_t pad) {
  // x holds one period without the repeated endpoint.
  const std::size_t n = x.size();
  const std::size_t reps = std::max<std::size_t>(1, (pad + n - 1) / n);
  std::vector<double> tiled;
  tiled.reserve((2 * reps + 1) * n);
  for (std::size_t r = 0; r < 2 * reps + 1; ++r) {
    tiled.insert(tiled.end(), x.begin(), x.end());
  }
  const std::vector<double> y = filtfilt(tiled, k);
  return {y.begin() + reps * n, y.begin() + (reps + 1) * n};
}

std::vector<double> zero_phase_reflected(const std::vector<double>& x,
                                         double k, std::size_t pad) {
  const std::size_t n = x.size();
  pad = std::min(pad, n - 1);
  std::vector<double> ext;
  ext.reserve(n + 2 * pad);
  for (std::size_t i = pad; i >= 1; --i) ext.push_back(2.0 * x.front() - x[i]);
  ext.insert(ext.end(), x.begin(), x.end());
  for (std::size_t i = 1; i <= pad; ++i) {
    ext.push_back(2.0 * x.back() - x[n - 1 - i]);
  }
  const std::vector<double> y = filtfilt(ext, k);
  return {y.begin() + pad, y.begin() + pad + n};
}

// Linear gap fill over flagged entries. Periodic tables wrap around.
std::vector<double> gap_fill(const std::vector<double>& x,
                             const std::vector<bool>& bad, bool periodic) {
  const std::size_t n = x.size();
  std::vector<std::size_t> good;
  for (std::size_t i = 0; i < n; ++i) {
    if (!bad[i]) good.push_back(i);
  }
  std::vector<double> out = x;
  if (good.size() == n) return out;
  for (std::size_t i = 0; i < n; ++i) {
    if (!bad[i]) continue;
    auto it = std::lower_bound(good.begin(), good.end(), i);
    const bool has_next = it != good.end();
    const bool has_prev = it != good.begin();
    if (has_prev && has_next) {
      const std::size_t a = *(it - 1), b = *it;
      const double w = static_cast<double>(i - a) / static_cast<double>(b - a);
      out[i] = x[a] + w * (x[b] - x[a]);
    } else if (periodic) {
      // Bridge the gap across the wrap-around.
      const std::size_t a = good.back();
      const std::size_t b = good.front();
      const double span = static_cast<double>(b + n - a);
      const double offset =
          static_cast<double>(i >= a ? i - a : i + n - a);
      out[i] = x[a] + offset / span * (x[b] - x[a]);
    } else {
      out[i] = has_prev ? x[good.back()] : x[good.front()];
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Loops

void validate_loop(const ShapeLoop& loop) {
  std::visit(
      Overloaded{
          [](const PhasedSine& l) {
            require_finite({l.amplitude1, l.phase1, l.offset1, l.amplitude2,
                            l.phase2, l.offset2},
                           "PhasedSine");
            if (!(std::isfinite(l.omega) && l.omega > 0.0)) {
              throw InvalidArgumentError("PhasedSine: omega must be > 0");
            }
          },
          [](const RotatedEllipse& l) {
            require_finite({l.radius1, l.radius2, l.rotation, l.center1,
                            l.center2},
                           "RotatedEllipse");
            if (!(std::isfinite(l.omega) && l.omega > 0.0)) {
              throw InvalidArgumentError("RotatedEllipse: omega must be > 0");
            }
          },
          [](const SampledLoop& l) {
            if (l.points.size() < 3) {
              throw InvalidArgumentError("SampledLoop: need at least 3 points");
            }
            for (const Angles& p : l.points) {
              if (!p.allFinite()) {
                throw InvalidArgumentError("SampledLoop: points must be finite");
              }
            }
            if (l.points.front() != l.points.back()) {
              throw InvalidArgumentError(
                  "SampledLoop: first and last point must coincide");
            }
            if (!(std::isfinite(l.period) && l.period > 0.0)) {
              throw InvalidArgumentError("SampledLoop: period must be > 0");
            }
          },
      },
      loop);
}

double loop_period(const ShapeLoop& loop) {
  return std::visit(
      Overloaded{
          [](const PhasedSine& l) { return kTwoPi / l.omega; },
          [](const RotatedEllipse& l) { return kTwoPi / l.omega; },
          [](const SampledLoop& l) { return l.period; },
      },
      loop);
}

Angles loop_point(const ShapeLoop& loop, double t) {
  return std::visit(
      Overloaded{
          [t](const PhasedSine& l) -> Angles {
            return {l.amplitude1 * std::sin(l.omega * t + l.phase1) + l.offset1,
                    l.amplitude2 * std::sin(l.omega * t + l.phase2) + l.offset2};
          },
          [t](const RotatedEllipse& l) -> Angles {
            const Vec2 local(l.radius1 * std::cos(l.omega * t),
                             l.radius2 * std::sin(l.omega * t));
            return Vec2(l.center1, l.center2) + rotation(l.rotation) * local;
          },
          [t](const SampledLoop& l) -> Angles {
            const SampledPosition p = locate(l, t);
            return (1.0 - p.w) * l.points[p.k] + p.w * l.points[p.k + 1];
          },
      },
      loop);
}

Angles loop_velocity(const ShapeLoop& loop, double t) {
  return std::visit(
      Overloaded{
          [t](const PhasedSine& l) -> Angles {
            return {l.amplitude1 * l.omega * std::cos(l.omega * t + l.phase1),
                    l.amplitude2 * l.omega * std::cos(l.omega * t + l.phase2)};
          },
          [t](const RotatedEllipse& l) -> Angles {
            const Vec2 local(-l.radius1 * l.omega * std::sin(l.omega * t),
                             l.radius2 * l.omega * std::cos(l.omega * t));
            return rotation(l.rotation) * local;
          },
          [t](const SampledLoop& l) -> Angles {
            const SampledPosition p = locate(l, t);
            const long k = static_cast<long>(p.k);
            return (1.0 - p.w) * sampled_node_velocity(l, k) +
                   p.w * sampled_node_velocity(l, k + 1);
          },
      },
      loop);
}

std::vector<Angles> loop_polyline(const ShapeLoop& loop, int samples) {
  if (const auto* s = std::get_if<SampledLoop>(&loop)) return s->points;
  if (samples < 3) throw InvalidArgumentError("loop needs at least 3 samples");
  const double period = loop_period(loop);
  std::vector<Angles> pts;
  pts.reserve(samples + 1);
  for (int j = 0; j < samples; ++j) {
    pts.push_back(loop_point(loop, period * j / samples));
  }
  pts.push_back(pts.front());
  return pts;
}

ShapeLoop reversed(const ShapeLoop& loop) {
  return std::visit(
      Overloaded{
          [](const PhasedSine& l) -> ShapeLoop {
            // a sin(-wt + phi) = (-a) sin(wt - phi)
            PhasedSine r = l;
            r.amplitude1 = -l.amplitude1;
            r.phase1 = -l.phase1;
            r.amplitude2 = -l.amplitude2;
            r.phase2 = -l.phase2;
            return r;
          },
          [](const RotatedEllipse& l) -> ShapeLoop {
            RotatedEllipse r = l;
            r.radius2 = -l.radius2;
            return r;
          },
          [](const SampledLoop& l) -> ShapeLoop {
            SampledLoop r = l;
            std::reverse(r.points.begin(), r.points.end());
            return r;
          },
      },
      loop);
}

PhasedSine straight_crossing_loop(double omega) {
  return {0.35, -1.817, 0.0, 0.53, -0.7186, 0.0, omega};
}

RotatedEllipse offset_ellipse_loop(double omega) {
  return {0.5, 0.25, kPi / 4.0, 5.0 * kPi / 4.0, 3.0 * kPi / 4.0, omega};
}

// ---------------------------------------------------------------------------
// Decomposition and Jacobian

Decomposition decompose(const SwimmerParams& params, const Angles& theta) {
  const Mat42 g = mobility(params, theta);
  return {g.topRows<2>(), g.bottomRows<2>()};
}

double condition_number(const Mat2& m) {
  const double det = m.determinant();
  if (det == 0.0 || !std::isfinite(det)) return INFINITY;
  const double fro2 = m.squaredNorm();
  const double disc =
      std::sqrt(std::max(0.0, fro2 * fro2 - 4.0 * det * det));
  const double smax2 = 0.5 * (fro2 + disc);
  return smax2 / std::abs(det);
}

Mat2 local_jacobian(const SwimmerParams& params, const Angles& theta) {
  const Decomposition d = decompose(params, theta);
  const double cond = condition_number(d.orientation);
  if (!(cond <= kOrientationConditionLimit)) {
    std::ostringstream os;
    os << "orientation block H is singular (cond = " << cond
       << ") at theta = (" << theta[0] << ", " << theta[1] << ")";
    throw SingularOrientationError(os.str());
  }
  return d.position * d.orientation.inverse();
}

// ---------------------------------------------------------------------------
// Curvature field

CurvatureField::CurvatureField(GridBounds bounds, int resolution)
    : bounds_(bounds), resolution_(resolution) {
  require_finite({bounds.theta1_min, bounds.theta1_max, bounds.theta2_min,
                  bounds.theta2_max},
                 "GridBounds");
  if (!(bounds.theta1_max > bounds.theta1_min) ||
      !(bounds.theta2_max > bounds.theta2_min)) {
    throw InvalidArgumentError("GridBounds: max must exceed min");
  }
  if (resolution < 3) {
    throw InvalidArgumentError("curvature field resolution must be >= 3");
  }
  spacing1_ = (bounds.theta1_max - bounds.theta1_min) / (resolution - 1);
  spacing2_ = (bounds.theta2_max - bounds.theta2_min) / (resolution - 1);
  const std::size_t n = static_cast<std::size_t>(resolution) * resolution;
  curl_x_.assign(n, 0.0);
  curl_y_.assign(n, 0.0);
  mask_.assign(n, 0);
}

std::size_t CurvatureField::masked_count() const {
  return static_cast<std::size_t>(std::count(mask_.begin(), mask_.end(), 1));
}

CurvatureField curvature_field(const SwimmerParams& params,
                               const GridBounds& bounds, int resolution,
                               int threads) {
  params.validate();
  if (resolution < kMinFieldResolution) {
    throw InvalidArgumentError("curvature field resolution must be >= 64");
  }
  CurvatureField field(bounds, resolution);
  const int n = resolution;
  std::vector<Mat2> jac(static_cast<std::size_t>(n) * n);
  std::vector<std::uint8_t> singular(jac.size(), 0);

  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t i) {
    for (int j = 0; j < n; ++j) {
      const std::size_t idx = field.index(static_cast<int>(i), j);
      const Angles theta(field.theta1(static_cast<int>(i)), field.theta2(j));
      if (auto jm = try_local_jacobian(params, theta)) {
        jac[idx] = *jm;
      } else {
        singular[idx] = 1;
      }
    }
  });

  const double h1 = field.spacing1();
  const double h2 = field.spacing2();
  // Derivative along one axis at position p of n, returning nullopt if any
  // stencil node is singular. `at(q)` maps an axis position to a node index.
  auto derivative = [&](int p, double h, auto at,
                        int column) -> std::optional<Vec2> {
    int q[3];
    double w[3];
    if (p == 0) {
      q[0] = 0, q[1] = 1, q[2] = 2;
      w[0] = -3.0, w[1] = 4.0, w[2] = -1.0;
    } else if (p == n - 1) {
      q[0] = n - 1, q[1] = n - 2, q[2] = n - 3;
      w[0] = 3.0, w[1] = -4.0, w[2] = 1.0;
    } else {
      q[0] = p - 1, q[1] = p, q[2] = p + 1;
      w[0] = -1.0, w[1] = 0.0, w[2] = 1.0;
    }
    Vec2 d = Vec2::Zero();
    for (int s = 0; s < 3; ++s) {
      const std::size_t idx = at(q[s]);
      if (singular[idx]) return std::nullopt;
      d += w[s] * jac[idx].col(column);
    }
    return d / (2.0 * h);
  };

  parallel_for(static_cast<std::size_t>(n), threads, [&](std::size_t iu) {
    const int i = static_cast<int>(iu);
    for (int j = 0; j < n; ++j) {
      const std::size_t idx = field.index(i, j);
      auto d1 = derivative(
          i, h1, [&](int q) { return field.index(q, j); }, 1);
      auto d2 = derivative(
          j, h2, [&](int q) { return field.index(i, q); }, 0);
      if (singular[idx] || !d1 || !d2) {
        field.mask_data()[idx] = 1;
        field.curl_x_data()[idx] = kNaN;
        field.curl_y_data()[idx] = kNaN;
        continue;
      }
      const Vec2 curl = *d1 - *d2;
      field.curl_x_data()[idx] = curl.x();
      field.curl_y_data()[idx] = curl.y();
    }
  });
  return field;
}

// ---------------------------------------------------------------------------
// Displacements

Vec2 loop_displacement_line(const SwimmerParams& params, const ShapeLoop& loop,
                            int samples) {
  params.validate();
  validate_loop(loop);
  if (!std::holds_alternative<SampledLoop>(loop) && samples < 256) {
    throw InvalidArgumentError("line integral needs at least 256 samples");
  }
  const std::vector<Angles> pts = loop_polyline(loop, samples);
  std::vector<Mat2> jac;
  jac.reserve(pts.size());
  for (const Angles& p : pts) jac.push_back(local_jacobian(params, p));
  Vec2 disp = Vec2::Zero();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    disp += 0.5 * (jac[i] + jac[i + 1]) * (pts[i + 1] - pts[i]);
  }
  return disp;
}

SurfaceDisplacement loop_displacement_surface(const CurvatureField& field,
                                              const ShapeLoop& loop,
                                              int polygon_samples) {
  validate_loop(loop);
  const std::vector<Angles> poly = loop_polyline(loop, polygon_samples);
  const GridBounds& b = field.bounds();
  double lo1 = INFINITY, hi1 = -INFINITY, lo2 = INFINITY, hi2 = -INFINITY;
  for (const Angles& p : poly) {
    lo1 = std::min(lo1, p.x()), hi1 = std::max(hi1, p.x());
    lo2 = std::min(lo2, p.y()), hi2 = std::max(hi2, p.y());
  }
  if (lo1 < b.theta1_min || hi1 > b.theta1_max || lo2 < b.theta2_min ||
      hi2 > b.theta2_max) {
    throw LoopOutsideBoundsError("loop leaves the curvature field bounds");
  }

  SurfaceDisplacement out;
  const double area = signed_area(poly);
  if (area == 0.0) return out;
  const double orientation = area > 0.0 ? 1.0 : -1.0;

  const double h1 = field.spacing1(), h2 = field.spacing2();
  const double band = std::max(h1, h2);
  const int n = field.resolution();
  auto first = [](double lo, double min, double h) {
    return static_cast<int>(std::floor((lo - min) / h));
  };
  const int i0 = std::max(0, first(lo1 - band, b.theta1_min, h1));
  const int i1 = std::min(n - 1, first(hi1 + band, b.theta1_min, h1) + 1);
  const int j0 = std::max(0, first(lo2 - band, b.theta2_min, h2));
  const int j1 = std::min(n - 1, first(hi2 + band, b.theta2_min, h2) + 1);

  Vec2 sum = Vec2::Zero();
  Vec2 boundary = Vec2::Zero();
  for (int i = i0; i <= i1; ++i) {
    for (int j = j0; j <= j1; ++j) {
      const double x = field.theta1(i), y = field.theta2(j);
      const bool inside = inside_even_odd(poly, x, y);
      if (inside && field.masked(i, j)) {
        std::ostringstream os;
        os << "masked (singular) cell at theta = (" << x << ", " << y
           << ") lies inside the loop";
        throw MaskedCellInsideLoopError(os.str());
      }
      if (field.masked(i, j)) continue;
      const Vec2 curl(field.curl_x(i, j), field.curl_y(i, j));
      if (inside) {
        sum += curl;
        ++out.cells_inside;
      }
      if (distance_to_polyline(poly, Angles(x, y)) <= band) {
        boundary += curl.cwiseAbs();
      }
    }
  }
  out.displacement = orientation * h1 * h2 * sum;
  out.boundary_bound = h1 * h2 * boundary;
  return out;
}

// ---------------------------------------------------------------------------
// Inversion

ControlSignal loop_to_control(const SwimmerParams& params,
                              const ShapeLoop& loop,
                              const InversionOptions& options) {
  params.validate();
  validate_loop(loop);
  if (options.samples < 256) {
    throw InvalidArgumentError("loop_to_control needs >= 256 samples per period");
  }
  const int n = options.samples;
  const double period = loop_period(loop);
  Sampled table;
  table.periodic = true;
  table.interpolation = Interpolation::kLinear;
  table.times.reserve(n + 1);
  table.values.reserve(n + 1);
  table.excluded.reserve(n + 1);
  int excluded = 0;
  for (int j = 0; j < n; ++j) {
    const double t = period * j / n;
    const Angles theta = loop_point(loop, t);
    const Angles rate = loop_velocity(loop, t);
    const Mat2 h = decompose(params, theta).orientation;
    const double cond = condition_number(h);
    FieldVector u{kNaN, kNaN};
    if (std::isfinite(cond)) u = FieldVector::from(h.inverse() * rate);
    const bool bad = !(cond <= options.exclusion_condition) ||
                     !std::isfinite(u.bx) || !std::isfinite(u.by);
    excluded += bad ? 1 : 0;
    table.times.push_back(t);
    table.values.push_back(u);
    table.excluded.push_back(bad);
  }
  table.times.push_back(period);
  table.values.push_back(table.values.front());
  table.excluded.push_back(table.excluded.front());

  if (excluded > options.max_excluded_fraction * n) {
    std::ostringstream os;
    os << excluded << " of " << n
       << " samples lie near the singular set; loop is not invertible";
    throw LoopInfeasibleError(os.str());
  }
  return ControlSignal(std::move(table));
}

ControlSignal regularize_control(const ControlSignal& raw, double cutoff) {
  const auto* in = std::get_if<Sampled>(&raw.variant());
  if (!in) throw InvalidArgumentError("regularize_control expects a Sampled signal");
  if (!(std::isfinite(cutoff) && cutoff > 0.0)) {
    throw InvalidArgumentError("cutoff must be > 0");
  }
  const std::size_t total = in->times.size();
  const double dt = (in->times.back() - in->times.front()) /
                    static_cast<double>(total - 1);
  for (std::size_t i = 1; i < total; ++i) {
    if (std::abs(in->times[i] - in->times[i - 1] - dt) > 1e-6 * dt) {
      throw InvalidArgumentError("regularize_control needs uniform sampling");
    }
  }
  const double half_angle = 0.5 * cutoff * dt;
  if (half_angle >= 0.5 * kPi) {
    throw InvalidArgumentError("cutoff is at or above the Nyquist frequency");
  }
  const double k = std::tan(half_angle);

  // A periodic table repeats its first sample at the end; drop it while
  // filtering and restore it afterwards.
  const bool periodic = in->periodic;
  const std::size_t n = periodic ? total - 1 : total;
  std::vector<bool> bad(n, false);
  std::vector<double> bx(n), by(n);
  std::size_t n_bad = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bad[i] = raw.excluded_at(i) || !std::isfinite(in->values[i].bx) ||
             !std::isfinite(in->values[i].by);
    n_bad += bad[i] ? 1 : 0;
    bx[i] = in->values[i].bx;
    by[i] = in->values[i].by;
  }
  if (n_bad == n) {
    throw InvalidArgumentError("every sample is excluded; nothing to regularize");
  }
  bx = gap_fill(bx, bad, periodic);
  by = gap_fill(by, bad, periodic);

  // Ten time constants of padding.
  const auto pad =
      static_cast<std::size_t>(std::ceil(10.0 / (cutoff * dt))) + 1;
  auto smooth = [&](const std::vector<double>& x) {
    return periodic ? zero_phase_periodic(x, k, pad)
                    : zero_phase_reflected(x, k, pad);
  };
  bx = smooth(bx);
  by = smooth(by);

  auto normalize = [](std::vector<double>& x) {
    double peak = 0.0;
    for (double v : x) peak = std::max(peak, std::abs(v));
    if (peak > 0.0) {
      for (double& v : x) v /= peak;
    }
  };
  normalize(bx);
  normalize(by);

  Sampled out;
  out.times = in->times;
  out.interpolation = Interpolation::kLinear;
  out.periodic = periodic;
  out.values.reserve(total);
  for (std::size_t i = 0; i < n; ++i) out.values.push_back({bx[i], by[i]});
  if (periodic) out.values.push_back(out.values.front());
  return ControlSignal(std::move(out));
}

}  // namespace magswim
