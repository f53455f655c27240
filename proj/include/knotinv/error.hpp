#ifndef KNOTINV_ERROR_HPP
#define KNOTINV_ERROR_HPP

#include <stdexcept>
#include <string>

namespace knotinv {

/// Base class of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed PD or polynomial text.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A diagram that is not a connected planar 4-valent diagram.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its domain (wrong diagram class, bad state length, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The state sum would exceed the configured crossing limit.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// An identity that must hold did not; signals a convention bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace knotinv

#endif  // KNOTINV_ERROR_HPP
