#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace riemwave {

/// Argument outside the mathematical domain of an operation (p <= 1, kappa <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A field evaluation produced NaN or Inf.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(double t, double x, const std::string& what);
  double t() const noexcept { return t_; }
  double x() const noexcept { return x_; }

 private:
  double t_;
  double x_;
};

/// Requested data (trajectory window, grid cells) is not available.
class StateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature did not reach its tolerance.
class AccuracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The solver produced a non-finite value.
class BlowupError : public std::runtime_error {
 public:
  BlowupError(std::size_t step, std::string quantity, std::size_t cell);
  std::size_t step() const noexcept { return step_; }
  const std::string& quantity() const noexcept { return quantity_; }
  std::size_t cell() const noexcept { return cell_; }

 private:
  std::size_t step_;
  std::string quantity_;
  std::size_t cell_;
};

/// Malformed or incomplete configuration document. `line` is 0 when the key is missing.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, std::size_t line, const std::string& what);
  const std::string& key() const noexcept { return key_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string key_;
  std::size_t line_;
};

}  // namespace riemwave
