#pragma once

#include <stdexcept>
#include <string>

namespace rqpd {

// An input outside its admissible range (angles, speeds, grid sizes).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation that lost integrity: excessive norm defect, non-convergence.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what, double value = 0.0)
      : std::runtime_error(what), value_(value) {}

  // The offending quantity (norm defect, last bracket width, ...).
  double value() const noexcept { return value_; }

 private:
  double value_;
};

}  // namespace rqpd
