#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nonufd {

/// Caller misuse: mixing elements of different semirings, unknown ids.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A hypothesis of a lemma or procedure does not hold for the given input.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The semiring lacks a capability the requested operation needs.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected expression text. Positions are 1-based line/column plus a
/// 0-based byte offset that never exceeds the input length.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset, std::size_t line,
             std::size_t column)
      : std::runtime_error(message + " at line " + std::to_string(line) +
                           ", column " + std::to_string(column)),
        offset_(offset),
        line_(line),
        column_(column) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace nonufd
