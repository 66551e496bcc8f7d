#pragma once

#include <stdexcept>
#include <string>

namespace fuzzgraph {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invariant violation at construction time or a precondition failure.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Graph text that cannot be parsed. Carries the 1-based offending line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// No strong path exists between a requested vertex pair, which leaves the
/// geodesic distance (and therefore the Wiener index) undefined.
class NoStrongPathError : public Error {
 public:
  using Error::Error;
};

}  // namespace fuzzgraph
