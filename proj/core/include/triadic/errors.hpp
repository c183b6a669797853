#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace triadic {

/// The requested domain needs integers wider than the configured arithmetic.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A dispersion description is malformed or not admissible on the domain.
class SpecError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " (line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace triadic
