#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chebbv {

/// Failure while parsing a function description or expression.
/// `position` is a byte offset into the input text.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// Arithmetic fault while evaluating an expression (division by zero,
/// log of a nonpositive value, ...).
class EvalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// An iterative computation failed to stabilize within its budget.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string& what, double last_delta)
      : std::runtime_error(what), last_delta_(last_delta) {}

  double last_delta() const noexcept { return last_delta_; }

private:
  double last_delta_;
};

}  // namespace chebbv
