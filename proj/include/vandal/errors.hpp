#pragma once

#include <stdexcept>
#include <string>

namespace vandal {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-domain input (dimension mismatch, duplicate nodes, bad ids).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A configured size cap would be exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// A randomized generator could not satisfy its constraints.
class FeasibilityError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis required by an identity or check does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Numerical routine failed to converge.
class ComputationError : public Error {
 public:
  using Error::Error;
};

}  // namespace vandal
