#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace waring {

/// Malformed polynomial, matrix or rational text. Line and column are 1-based.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::invalid_argument(what + " at line " + std::to_string(line) + ", column " +
                              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularMatrix : public std::domain_error {
 public:
  SingularMatrix() : std::domain_error("matrix is singular") {}
  using std::domain_error::domain_error;
};

class NotCubic : public std::invalid_argument {
 public:
  NotCubic() : std::invalid_argument("polynomial is not a homogeneous cubic form") {}
};

class NotHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace waring
