#pragma once

#include <stdexcept>
#include <string>

namespace kpath {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input, violated precondition, or bad argument.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Parse failure in one of the text formats; carries the 1-based line.
class FormatError : public InvalidInput {
 public:
  FormatError(int line, const std::string& what)
      : InvalidInput("line " + std::to_string(line) + ": " + what), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// An exact computation would exceed its configured budget. Never a wrong answer.
class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace kpath
