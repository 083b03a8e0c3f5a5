#pragma once
#include <stdexcept>
#include <string>

namespace protori {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad user input: malformed text, shape mismatch, violated precondition.
struct InputError : Error {
  using Error::Error;
};

struct ParseError : InputError {
  int line, column;
  ParseError(const std::string& what, int line, int column)
      : InputError(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line(line), column(column) {}
};

// A configured enumeration or factoring ceiling was hit.
struct BoundError : Error {
  using Error::Error;
};

}  // namespace protori
