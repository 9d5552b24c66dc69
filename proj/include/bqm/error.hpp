#pragma once

#include <stdexcept>
#include <string>

namespace bqm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated a precondition: bad field parameters, mismatched
/// configurations, division by zero, self-orthogonal input, and so on.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Seeing one of these means a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace bqm
