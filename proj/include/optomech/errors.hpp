#pragma once

#include <stdexcept>
#include <string>

namespace optomech {

// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed configuration or sweep specification.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a formula (negative power, unphysical
// covariance, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DegenerateConfigError : public Error {
 public:
  using Error::Error;
};

class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// 2*lambda0 >= Delta1 + Delta2: no finite squeezing parameter exists.
class ParametricInstabilityError : public Error {
 public:
  using Error::Error;
};

// A transformed damping rate gamma'_j is not positive.
class InvalidBathError : public Error {
 public:
  using Error::Error;
};

// Drift matrix is not Hurwitz.
class StabilityError : public Error {
 public:
  StabilityError(const std::string& what, double margin)
      : Error(what), margin_(margin) {}
  double margin() const noexcept { return margin_; }

 private:
  double margin_;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

// Net cavity anti-damping: gamma'_j + Gamma_j <= 0.
class HeatingDominatedError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

class OracleDivergenceError : public Error {
 public:
  OracleDivergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace optomech
