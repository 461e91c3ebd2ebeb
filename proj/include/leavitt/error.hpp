#pragma once

#include <stdexcept>
#include <string>

namespace leavitt {

enum class ErrorKind {
  Syntax,
  UnknownVertex,
  DuplicateId,
  Precondition,   // argument violates an operation's precondition
  EmptyGraph,
  Inconclusive,   // lattice truncated before a decision could be made
  Limit,          // an enumeration exceeded its hard cap
  Internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failures carry a 1-based position into the input text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(ErrorKind::Syntax, "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace leavitt
