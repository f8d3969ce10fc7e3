#pragma once

#include <stdexcept>
#include <string>

namespace vafilt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// A computation needed a weight slice beyond the declared cutoff.
class CutoffExceeded : public Error {
 public:
  using Error::Error;
};

class SectorMismatch : public Error {
 public:
  using Error::Error;
};

class NonHomogeneous : public Error {
 public:
  using Error::Error;
};

class UnsupportedPeriod : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class ContainmentViolation : public Error {
 public:
  using Error::Error;
};

class InsufficientCutoff : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace vafilt
