#pragma once

#include <stdexcept>
#include <string>

namespace cramer {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad size, index out of range,
/// non-bijective permutation, division by zero, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configurable size guard was exceeded (e.g. n > max_n).
class GuardExceeded : public Error {
 public:
  using Error::Error;
};

/// The numeric system has X_0 = 0, so the quotients do not exist.
class SingularSystem : public Error {
 public:
  SingularSystem() : Error("singular system: X_0 = 0") {}
};

/// Text or JSON input could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cramer
