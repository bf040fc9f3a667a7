#pragma once

#include <stdexcept>
#include <string>

namespace lovelieb {

/// Argument outside the mathematical domain of a function (alpha <= 0, |x| > 1, poles).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid solver parameters or unsupported combinations.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure failed (singular system, no convergence).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense solve failed; carries the reciprocal condition estimate.
class SingularSystemError : public NumericalError {
 public:
  SingularSystemError(const std::string& what, double rcond)
      : NumericalError(what), rcond_(rcond) {}
  double rcond() const noexcept { return rcond_; }

 private:
  double rcond_;
};

}  // namespace lovelieb
