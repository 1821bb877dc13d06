#pragma once

#include <stdexcept>
#include <string>

namespace hlab {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A function returned a non-finite value where a finite one was required.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// An iterative routine ran out of budget. Carries the last two estimates.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double previous, double last)
      : Error(what + " (previous estimate " + std::to_string(previous) + ", last estimate " +
              std::to_string(last) + ")"),
        previous_(previous),
        last_(last) {}

  double previous() const noexcept { return previous_; }
  double last() const noexcept { return last_; }

 private:
  double previous_;
  double last_;
};

class NoPathError : public Error {
 public:
  using Error::Error;
};

/// A point lies within one grid cell of the boundary where 1/d(z, ∂D) blows up.
class NearBoundaryError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a map (e.g. ‖z‖ ≥ 1 for a ball automorphism).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A theorem hypothesis could not be certified, so the check is not a theorem test.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// φ(t) = 0 at a positive distance; the Hölder quotient is undefined.
class MajorantDegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Bad configuration or command line. Maps to exit status 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace hlab
