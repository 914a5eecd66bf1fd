#include "holderdeg/errors.hpp"

namespace holderdeg {

ConvergenceError::ConvergenceError(const std::string& what, double achieved_error, int iterations)
    : Error(what), achieved_error_(achieved_error), iterations_(iterations) {}

void require(bool condition, const std::string& message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace holderdeg
