#pragma once

#include <stdexcept>
#include <string>

namespace lightcone {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (non-finite input,
/// x <= 0 where x > 0 is required, malformed grid, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Gamma function evaluated at a non-positive integer.
class PoleError : public DomainError {
 public:
  PoleError(const std::string& what, long pole) : DomainError(what), pole_(pole) {}
  long pole() const noexcept { return pole_; }

 private:
  long pole_;
};

/// Adaptive quadrature ran out of subdivisions before meeting its tolerance.
/// Carries the best estimate obtained.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double error_estimate)
      : Error(what), best_(best_estimate), error_(error_estimate) {}
  double best_estimate() const noexcept { return best_; }
  double error_estimate() const noexcept { return error_; }

 private:
  double best_;
  double error_;
};

/// A DecayHint is contradicted by the sampled integrand.
class HintError : public Error {
 public:
  using Error::Error;
};

/// Root finding for a zero of the Bessel kernel failed.
class KernelZeroError : public Error {
 public:
  using Error::Error;
};

/// Data does not cover the interval a formula needs.
class CoverageError : public Error {
 public:
  using Error::Error;
};

/// Truncation of a log grid / frequency grid loses more than the tolerance.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// ODE step size does not resolve the oscillation.
class ResolutionError : public Error {
 public:
  using Error::Error;
};

/// Phase extraction point still feels the potential.
class ContaminationError : public Error {
 public:
  ContaminationError(const std::string& what, double bias) : Error(what), bias_(bias) {}
  double estimated_bias() const noexcept { return bias_; }

 private:
  double bias_;
};

/// File or configuration problem.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace lightcone
