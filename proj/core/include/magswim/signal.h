#ifndef MAGSWIM_SIGNAL_H_
#define MAGSWIM_SIGNAL_H_

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "magswim/types.h"

namespace magswim {

class ControlSignal;

// B(t) = amplitude * R(heading) * (1, sin(omega t)).
struct ConstPlusSine {
  double amplitude = 1.0;
  double omega = kTwoPi;
  double heading = 0.0;
};

// B(t) = R(slow_rate * t) * base(t).
struct Rotating {
  std::shared_ptr<const ControlSignal> base;
  double slow_rate = 0.0;
};

struct ScheduleSegment {
  double duration = 0.0;
  std::shared_ptr<const ControlSignal> signal;
};

// Piecewise concatenation over left-closed segments [start, start + duration).
// The last segment also covers its right end. Segment signals are evaluated
// at global time, not at time since the segment began.
struct Schedule {
  std::vector<ScheduleSegment> segments;
};

enum class Interpolation { kLinear, kHold };

// Tabulated field. `excluded` is either empty or parallel to `values` and
// marks samples that an upstream producer could not compute reliably.
// `periodic` declares that the table covers exactly one period, with the
// last sample repeating the first.
struct Sampled {
  std::vector<double> times;
  std::vector<FieldVector> values;
  Interpolation interpolation = Interpolation::kLinear;
  std::vector<bool> excluded;
  bool periodic = false;
};

class ControlSignal {
 public:
  using Variant = std::variant<ConstPlusSine, Rotating, Schedule, Sampled>;

  // Each arm is validated on construction; InvalidArgumentError otherwise.
  ControlSignal(ConstPlusSine arm);  // NOLINT(google-explicit-constructor)
  ControlSignal(Rotating arm);       // NOLINT
  ControlSignal(Schedule arm);       // NOLINT
  ControlSignal(Sampled arm);        // NOLINT

  const Variant& variant() const { return arm_; }

  // Closed-form evaluation. Throws SignalDomainError outside the domain.
  FieldVector operator()(double t) const;

  // Right end of the domain for Schedule and Sampled; nullopt otherwise.
  std::optional<double> end_time() const;

  bool excluded_at(std::size_t index) const;

 private:
  Variant arm_;
};

FieldVector evaluate_signal(const ControlSignal& signal, double t);

// Convenience constructors.
ControlSignal make_const_plus_sine(double amplitude, double omega,
                                   double heading);
ControlSignal make_rotating(ControlSignal base, double slow_rate);
ControlSignal make_schedule(
    const std::vector<std::pair<double, ControlSignal>>& segments);

// R(angle) * signal(t), built arm by arm (headings shift, tables rotate).
ControlSignal rotated(const ControlSignal& signal, double angle);

// Zero field for all t >= 0.
ControlSignal zero_signal();

}  // namespace magswim

#endif  // MAGSWIM_SIGNAL_H_
