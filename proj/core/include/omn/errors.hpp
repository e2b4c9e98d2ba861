#pragma once

#include <stdexcept>
#include <string>

namespace omn {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range input (bad letter, gcd violation, bad JSON).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The operation is mathematically unsupported for these parameters.
class Unsupported : public Error {
 public:
  using Error::Error;
};

/// A configured resource bound (term count, matrix size) would be exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace omn
