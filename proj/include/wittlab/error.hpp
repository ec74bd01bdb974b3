#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wittlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed group source. `what()` reads "file:line:column: message".
class ParseError : public Error {
 public:
  ParseError(std::string file, std::size_t line, std::size_t column,
             const std::string& message)
      : Error(file + ":" + std::to_string(line) + ":" +
              std::to_string(column) + ": " + message),
        file_(std::move(file)),
        line_(line),
        column_(column),
        message_(message) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string file_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

/// A caller-supplied argument violates an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A computation could not be completed (size caps, internal consistency).
class ComputationError : public Error {
 public:
  using Error::Error;
};

/// Coset enumeration ran out of table space.
class EnumerationLimit : public ComputationError {
 public:
  using ComputationError::ComputationError;
};

/// A file or directory could not be read.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace wittlab
