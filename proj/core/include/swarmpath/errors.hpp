#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace swarmpath {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed scenario, sweep or trace document.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed document whose values violate a domain invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a numerical routine.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A direction was requested from a zero-length vector (agent on an obstacle center).
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Controller failure during a simulation run, tagged with the step that produced it.
class SimulationError : public Error {
 public:
  SimulationError(std::size_t step, const std::string &what)
      : Error("step " + std::to_string(step) + ": " + what), step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace swarmpath
