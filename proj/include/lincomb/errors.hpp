#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lincomb {

/// Malformed graph or coefficient input. line() is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A functional with k terms was applied to a graph of order < k.
class OrderTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured work cap (exhaustive order, solver order) would be exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No member of a family could be drawn.
class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lincomb
