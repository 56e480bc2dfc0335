#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coxtrace {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed group-spec text or word. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An operation was asked of a group kind it does not apply to.
class KindError : public Error {
 public:
  using Error::Error;
};

// A mathematical invariant failed at runtime. Signals an arithmetic bug, never bad input.
class InternalFault : public Error {
 public:
  using Error::Error;
};

// The brute-force oracle refused an input beyond its configured limits.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace coxtrace
