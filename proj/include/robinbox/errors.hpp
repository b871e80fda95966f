#pragma once

#include <stdexcept>
#include <string>

namespace robinbox {

// Every failure raised by the library derives from Error, so callers that
// only care about "did it work" can catch one type. The CLI maps the
// categories onto its exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the principal domain/range of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid interval or box geometry (non-positive or degenerate widths).
class GeometryError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Perimeter-scaled quantity requested for a box that is not a rectangle.
class DimensionError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Spectral ratio requested at alpha = 0, where lambda_1 vanishes.
class AlphaZero : public DomainError {
 public:
  using DomainError::DomainError;
};

class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class NoSignChange : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class MaxIterExceeded : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class BracketNotFound : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

// The inverse ("hearing") problem has no rectangle matching the data.
class Inconsistent : public Error {
 public:
  Inconsistent(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace robinbox
