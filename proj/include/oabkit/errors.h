#pragma once

#include <stdexcept>
#include <string>

namespace oabkit {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not fit together (e.g. multiplying 2x3 by 2x2).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// An operation was called on data violating its documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A configured size limit (group order cap, search degree) was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace oabkit
