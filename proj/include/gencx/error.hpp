#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gencx {

/// Raised when an operation is applied outside its mathematical domain
/// (zero divisor, even root of a negative module, log of a nonpositive value...).
/// Carries the offending value and the violated constraint.
class DomainError : public std::domain_error {
 public:
  DomainError(std::string constraint, double value)
      : std::domain_error(constraint + " (got " + std::to_string(value) + ")"),
        constraint_(std::move(constraint)),
        value_(value) {}

  const std::string& constraint() const noexcept { return constraint_; }
  double value() const noexcept { return value_; }

 private:
  std::string constraint_;
  double value_;
};

/// Binary operation between generalized complex numbers of different classes.
class ClassMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace gencx
