#pragma once

#include <stdexcept>
#include <string>

namespace unionsep {

/// Raised when a caller violates an operation's precondition (bad vertex id,
/// missing edge, parameters outside the supported range).
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the text-format readers; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string &reason)
      : std::runtime_error("line " + std::to_string(line) + ": " + reason),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace unionsep
