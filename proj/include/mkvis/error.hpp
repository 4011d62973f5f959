#pragma once

#include <stdexcept>
#include <string>

namespace mkvis {

// Base of every error the library throws on bad input or refused work.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations: ids out of range, malformed sets, bad parameters.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// An operation that needs a connected graph (or a connected pair) was given
// vertices in different components.
class Disconnected : public Error {
 public:
  using Error::Error;
};

// Exact solvers and the geodesic oracle refuse instances above their limits
// instead of approximating.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed edge-list or JSON input; line is 1-based, 0 when unknown.
class ParseError : public InvalidInput {
 public:
  ParseError(int line, const std::string& what)
      : InvalidInput(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace mkvis
