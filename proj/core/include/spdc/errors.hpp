#pragma once

#include <stdexcept>
#include <string>

namespace spdc {

// All library failures derive from Error so callers can catch once.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Wavelength outside a dispersion model's valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Configuration where a formula's denominator vanishes (e.g. ng_1 == ng_2
// for the linear phase-matching rate).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

class SingularityError : public Error {
 public:
  using Error::Error;
};

// Quadrature failed to reach the requested tolerance within its budget.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double achieved_error)
      : Error(what), achieved_error_(achieved_error) {}

  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

// Malformed input files or configs.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace spdc
