#ifndef MAGSWIM_ERRORS_H_
#define MAGSWIM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace magswim {

// Base class for every failure raised by the library. `kind()` is a stable
// machine-readable name that the CLI reports verbatim.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

#define MAGSWIM_DEFINE_ERROR(Name)                                   \
  class Name : public Error {                                        \
   public:                                                           \
    explicit Name(const std::string& message) : Error(#Name, message) {} \
  }

// Precondition violated by a caller-supplied argument.
MAGSWIM_DEFINE_ERROR(InvalidArgumentError);
// Drag matrix numerically singular (invalid drag parameters).
MAGSWIM_DEFINE_ERROR(SingularDragError);
// Orientation block H too ill-conditioned to invert (theta1 ~ theta2 mod pi).
MAGSWIM_DEFINE_ERROR(SingularOrientationError);
MAGSWIM_DEFINE_ERROR(NonFiniteStateError);
// Signal evaluated outside its time domain.
MAGSWIM_DEFINE_ERROR(SignalDomainError);
MAGSWIM_DEFINE_ERROR(IncommensuratePeriodError);
MAGSWIM_DEFINE_ERROR(LoopInfeasibleError);
MAGSWIM_DEFINE_ERROR(LoopOutsideBoundsError);
MAGSWIM_DEFINE_ERROR(MaskedCellInsideLoopError);
MAGSWIM_DEFINE_ERROR(NonConvergenceError);
MAGSWIM_DEFINE_ERROR(ConfigError);

#undef MAGSWIM_DEFINE_ERROR

}  // namespace magswim

#endif  // MAGSWIM_ERRORS_H_
