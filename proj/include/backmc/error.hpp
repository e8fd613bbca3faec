#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace backmc {

// Invalid numeric parameter (probabilities out of range, sizes too small, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph input. `line` is 1-based, 0 when not tied to a line.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Node id or neighbor index outside the graph.
class BoundsError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Caller broke a documented precondition (e.g. even-length median input).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The target has degree 0, so its PageRank is exactly alpha/n and no
// estimator is needed.
class IsolatedTargetError : public std::runtime_error {
 public:
  IsolatedTargetError(double exact_value)
      : std::runtime_error("isolated target: pi(t)=alpha/n exactly"),
        exact_value_(exact_value) {}
  double exact_value() const noexcept { return exact_value_; }

 private:
  double exact_value_;
};

}  // namespace backmc
