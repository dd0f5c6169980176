#include "magswim/signal.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "magswim/errors.h"

namespace magswim {
namespace {

// Slack for end-of-domain checks; RK stages can land a rounding error past
// the nominal end.
double domain_slack(double end) { return 1e-9 * std::max(1.0, std::abs(end)); }

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void validate(const ConstPlusSine& s) {
  if (!std::isfinite(s.amplitude) || !std::isfinite(s.heading)) {
    throw InvalidArgumentError("ConstPlusSine: amplitude and heading must be finite");
  }
  if (!(std::isfinite(s.omega) && s.omega > 0.0)) {
    throw InvalidArgumentError("ConstPlusSine: omega must be > 0");
  }
}

void validate(const Rotating& s) {
  if (!s.base) throw InvalidArgumentError("Rotating: missing base signal");
  if (!std::isfinite(s.slow_rate)) {
    throw InvalidArgumentError("Rotating: slow_rate must be finite");
  }
}

void validate(const Schedule& s) {
  if (s.segments.empty()) {
    throw InvalidArgumentError("Schedule: at least one segment required");
  }
  for (const ScheduleSegment& seg : s.segments) {
    if (!(std::isfinite(seg.duration) && seg.duration > 0.0)) {
      throw InvalidArgumentError("Schedule: segment durations must be > 0");
    }
    if (!seg.signal) throw InvalidArgumentError("Schedule: missing segment signal");
  }
}

void validate(const Sampled& s) {
  if (s.times.size() < 2 || s.times.size() != s.values.size()) {
    throw InvalidArgumentError(
        "Sampled: times and values must have equal length >= 2");
  }
  if (!s.excluded.empty() && s.excluded.size() != s.values.size()) {
    throw InvalidArgumentError("Sampled: excluded flags must match values");
  }
  for (std::size_t i = 0; i < s.times.size(); ++i) {
    if (!std::isfinite(s.times[i])) {
      throw InvalidArgumentError("Sampled: times must be finite");
    }
    if (i > 0 && !(s.times[i] > s.times[i - 1])) {
      throw InvalidArgumentError("Sampled: times must be strictly increasing");
    }
    const bool flagged = !s.excluded.empty() && s.excluded[i];
    if (!flagged &&
        !(std::isfinite(s.values[i].bx) && std::isfinite(s.values[i].by))) {
      throw InvalidArgumentError(
          "Sampled: non-finite value at a sample not marked excluded");
    }
  }
}

[[noreturn]] void out_of_domain(double t, double lo, double hi) {
  std::ostringstream os;
  os << "time " << t << " outside signal domain [" << lo << ", " << hi << "]";
  throw SignalDomainError(os.str());
}

FieldVector eval_sampled(const Sampled& s, double t) {
  const double lo = s.times.front();
  const double hi = s.times.back();
  if (s.periodic && t > hi) {
    const double span = hi - lo;
    t = lo + std::fmod(t - lo, span);
  }
  if (!(t >= lo - domain_slack(lo) && t <= hi + domain_slack(hi))) {
    out_of_domain(t, lo, hi);
  }
  t = std::clamp(t, lo, hi);
  // Index of the last sample with time <= t.
  auto it = std::upper_bound(s.times.begin(), s.times.end(), t);
  std::size_t i = static_cast<std::size_t>(it - s.times.begin());
  i = i == 0 ? 0 : i - 1;
  if (i + 1 >= s.times.size()) return s.values.back();
  if (s.interpolation == Interpolation::kHold) return s.values[i];
  const double w = (t - s.times[i]) / (s.times[i + 1] - s.times[i]);
  const FieldVector& a = s.values[i];
  const FieldVector& b = s.values[i + 1];
  return {a.bx + w * (b.bx - a.bx), a.by + w * (b.by - a.by)};
}

}  // namespace

ControlSignal::ControlSignal(ConstPlusSine arm) : arm_(arm) { validate(arm); }
ControlSignal::ControlSignal(Rotating arm) : arm_(arm) { validate(arm); }
ControlSignal::ControlSignal(Schedule arm) : arm_(arm) {
  validate(std::get<Schedule>(arm_));
}
ControlSignal::ControlSignal(Sampled arm) : arm_(std::move(arm)) {
  validate(std::get<Sampled>(arm_));
}

FieldVector ControlSignal::operator()(double t) const {
  if (!std::isfinite(t)) throw SignalDomainError("non-finite evaluation time");
  return std::visit(
      Overloaded{
          [t](const ConstPlusSine& s) -> FieldVector {
            if (t < 0.0) out_of_domain(t, 0.0, INFINITY);
            const Vec2 b = s.amplitude * (rotation(s.heading) *
                                          Vec2(1.0, std::sin(s.omega * t)));
            return FieldVector::from(b);
          },
          [t](const Rotating& s) -> FieldVector {
            const Vec2 b = rotation(s.slow_rate * t) * (*s.base)(t).vec();
            return FieldVector::from(b);
          },
          [t](const Schedule& s) -> FieldVector {
            double start = 0.0;
            double total = 0.0;
            for (const ScheduleSegment& seg : s.segments) total += seg.duration;
            if (t < 0.0 || t > total + domain_slack(total)) {
              out_of_domain(t, 0.0, total);
            }
            for (std::size_t i = 0; i < s.segments.size(); ++i) {
              const double end = start + s.segments[i].duration;
              if (t < end || i + 1 == s.segments.size()) {
                return (*s.segments[i].signal)(t);
              }
              start = end;
            }
            return (*s.segments.back().signal)(t);
          },
          [t](const Sampled& s) -> FieldVector { return eval_sampled(s, t); },
      },
      arm_);
}

std::optional<double> ControlSignal::end_time() const {
  if (const auto* s = std::get_if<Schedule>(&arm_)) {
    double total = 0.0;
    for (const ScheduleSegment& seg : s->segments) total += seg.duration;
    return total;
  }
  if (const auto* s = std::get_if<Sampled>(&arm_)) {
    if (s->periodic) return std::nullopt;
    return s->times.back();
  }
  return std::nullopt;
}

bool ControlSignal::excluded_at(std::size_t index) const {
  const auto* s = std::get_if<Sampled>(&arm_);
  return s && !s->excluded.empty() && index < s->excluded.size() &&
         s->excluded[index];
}

FieldVector evaluate_signal(const ControlSignal& signal, double t) {
  return signal(t);
}

ControlSignal make_const_plus_sine(double amplitude, double omega,
                                   double heading) {
  return ConstPlusSine{amplitude, omega, heading};
}

ControlSignal make_rotating(ControlSignal base, double slow_rate) {
  return Rotating{std::make_shared<const ControlSignal>(std::move(base)),
                  slow_rate};
}

ControlSignal make_schedule(
    const std::vector<std::pair<double, ControlSignal>>& segments) {
  Schedule schedule;
  for (const auto& [duration, signal] : segments) {
    schedule.segments.push_back(
        {duration, std::make_shared<const ControlSignal>(signal)});
  }
  return schedule;
}

ControlSignal zero_signal() { return ConstPlusSine{0.0, kTwoPi, 0.0}; }

ControlSignal rotated(const ControlSignal& signal, double angle) {
  return std::visit(
      Overloaded{
          [angle](const ConstPlusSine& s) -> ControlSignal {
            ConstPlusSine r = s;
            r.heading += angle;
            return r;
          },
          [angle](const Rotating& s) -> ControlSignal {
            return Rotating{std::make_shared<const ControlSignal>(
                                rotated(*s.base, angle)),
                            s.slow_rate};
          },
          [angle](const Schedule& s) -> ControlSignal {
            Schedule r;
            for (const ScheduleSegment& seg : s.segments) {
              r.segments.push_back(
                  {seg.duration, std::make_shared<const ControlSignal>(
                                     rotated(*seg.signal, angle))});
            }
            return r;
          },
          [angle](const Sampled& s) -> ControlSignal {
            Sampled r = s;
            const Mat2 rot = rotation(angle);
            for (FieldVector& v : r.values) v = FieldVector::from(rot * v.vec());
            return r;
          },
      },
      signal.variant());
}

}  // namespace magswim
