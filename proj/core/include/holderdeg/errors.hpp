#pragma once

#include <stdexcept>
#include <string>

namespace holderdeg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called outside its documented domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A kernel or integrand was evaluated on its singular (diagonal) set.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Sampling or quadrature settings that cannot produce a meaningful answer.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// An iterative or adaptive method did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double achieved_error, int iterations);

  double achieved_error() const noexcept { return achieved_error_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double achieved_error_;
  int iterations_;
};

void require(bool condition, const std::string& message);

}  // namespace holderdeg
