#pragma once

#include <stdexcept>
#include <string>

namespace trimode {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An input value lies outside the domain of the operation (non-positive
/// mass, quantum number above the Hermite cap, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The coupling matrix is not positive definite, so at least one normal mode
/// has a non-positive squared frequency.
class InstabilityError : public Error {
 public:
  InstabilityError(const std::string& what, double eigenvalue)
      : Error(what), eigenvalue_(eigenvalue) {}
  double eigenvalue() const noexcept { return eigenvalue_; }

 private:
  double eigenvalue_;
};

/// An iterative routine failed to converge.
class NumericError : public Error {
 public:
  NumericError(const std::string& what, int iterations)
      : Error(what), iterations_(iterations) {}
  int iterations() const noexcept { return iterations_; }

 private:
  int iterations_;
};

/// The middle rotation angle sits at +-pi/2; only theta -+ varphi is defined.
class GimbalLockError : public Error {
 public:
  using Error::Error;
};

/// A quadrature grid was too coarse to trust.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double drift)
      : Error(what), drift_(drift) {}
  double drift() const noexcept { return drift_; }

 private:
  double drift_;
};

/// Caller violated a documented precondition.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace trimode
