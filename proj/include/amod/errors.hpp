#pragma once

#include <stdexcept>
#include <string>

namespace amod {

// Base for every error the library raises on bad input. The CLI maps all of
// these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inconsistent dimensions, grids or configuration values.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation is violated by the data
// (spectral leakage, grid resolution, support collisions).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The covering does not cover; carries the worst frequency.
class ConstructionError : public Error {
 public:
  ConstructionError(const std::string& what, double worst_frequency)
      : Error(what), worst_frequency_(worst_frequency) {}
  double worst_frequency() const { return worst_frequency_; }

 private:
  double worst_frequency_;
};

}  // namespace amod
