#ifndef MAGSWIM_TESTS_SUPPORT_H_
#define MAGSWIM_TESTS_SUPPORT_H_

#include <cstdint>
#include <random>

#include "magswim/model.h"
#include "magswim/signal.h"
#include "magswim/types.h"

namespace testing_support {

using namespace magswim;

// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng_);
  }

  Angles angles(double span = kPi) { return {uniform(-span, span), uniform(-span, span)}; }

  // Orientations at least `gap` away from theta1 - theta2 in pi Z.
  Angles regular_angles(double gap = 0.2) {
    for (;;) {
      const Angles a = angles();
      const double d = std::remainder(a[0] - a[1], kPi);
      if (std::abs(d) > gap) return a;
    }
  }

  State state() {
    return {uniform(-3, 3), uniform(-3, 3), uniform(-kPi, kPi), uniform(-kPi, kPi)};
  }

  SwimmerParams params() {
    SwimmerParams p;
    p.link_length = uniform(0.5, 2.0);
    p.drag_tangential = uniform(0.5, 2.0);
    p.drag_normal = p.drag_tangential * uniform(1.2, 3.0);
    p.link_volume = uniform(0.5, 2.0);
    p.magnetization_scale = uniform(0.5, 2.0);
    p.magnetization = {uniform(-2, 2), uniform(-2, 2), uniform(-1, 1), uniform(-1, 1)};
    return p;
  }

  // One of the closed-form arms, with moderate amplitude and frequency.
  // Signals without jumps, for comparisons against adaptive integration.
  ControlSignal smooth_signal() {
    const ControlSignal base = make_const_plus_sine(
        uniform(0.3, 1.5), uniform(1.0, 8.0), uniform(-kPi, kPi));
    if (integer(0, 1) == 0) return base;
    return make_rotating(base, uniform(-0.8, 0.8));
  }

  ControlSignal signal() {
    const ControlSignal base = make_const_plus_sine(
        uniform(0.3, 1.5), uniform(1.0, 8.0), uniform(-kPi, kPi));
    switch (integer(0, 2)) {
      case 0:
        return base;
      case 1:
        return make_rotating(base, uniform(-0.8, 0.8));
      default:
        return make_schedule({{uniform(0.5, 2.0), base},
                              {uniform(0.5, 2.0), make_const_plus_sine(
                                                      uniform(0.3, 1.5),
                                                      uniform(1.0, 8.0),
                                                      uniform(-kPi, kPi))}});
    }
  }

 private:
  std::mt19937_64 rng_;
};

inline double max_abs_diff(const State& a, const State& b) {
  return (a.vec() - b.vec()).cwiseAbs().maxCoeff();
}

}  // namespace testing_support

#endif  // MAGSWIM_TESTS_SUPPORT_H_
