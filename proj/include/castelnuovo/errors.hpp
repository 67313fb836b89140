#pragma once

#include <stdexcept>
#include <string>

namespace castelnuovo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (bad partition, h = 0, r < 1, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration was asked to go beyond its configured cap.
class SizeExceeded : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// The incidence condition is vacuous (every subspace meets every line).
class DegenerateCondition : public Error {
 public:
  using Error::Error;
};

class RhoNonzero : public Error {
 public:
  explicit RhoNonzero(long long rho)
      : Error("Brill-Noether number is nonzero: rho=" + std::to_string(rho)), rho_(rho) {}
  long long rho() const noexcept { return rho_; }

 private:
  long long rho_;
};

/// g - d + r < 1: the series is non-special and the Schubert problem has no conditions.
class NonSpecialSeries : public Error {
 public:
  using Error::Error;
};

class InvalidResidual : public Error {
 public:
  using Error::Error;
};

class MixedField : public Error {
 public:
  using Error::Error;
};

class AmbientMismatch : public Error {
 public:
  using Error::Error;
};

class CoincidentParameter : public Error {
 public:
  using Error::Error;
};

/// The four-lines incidence system has rank below 4.
class DegenerateConfiguration : public Error {
 public:
  using Error::Error;
};

/// The Plücker quadric vanishes identically on the pencil: infinitely many solutions.
class NonReducedPencil : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace castelnuovo
