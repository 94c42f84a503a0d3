#pragma once

#include <stdexcept>
#include <string>

namespace pw {

/// Argument outside the mathematical domain of an operation
/// (non-positive rate, reflectivity outside (0,1), non-integrable term, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Linear system whose drift matrix has an eigenvalue with non-negative real part.
class StabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rational function evaluated at (or numerically on top of) a pole.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Integration window too short for the requested tail tolerance.
class WindowError : public std::runtime_error {
 public:
  WindowError(const std::string& what, double suggested)
      : std::runtime_error(what), suggested_window_(suggested) {}
  [[nodiscard]] double suggested_window() const { return suggested_window_; }

 private:
  double suggested_window_;
};

/// Closed form requested for a quantity that only has sampled data.
class NotAnalyticError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace pw
