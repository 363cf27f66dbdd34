#pragma once

#include <stdexcept>
#include <string>

namespace torideg {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input: polynomials, order descriptors, matrix and ideal files.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold for the supplied data
/// (ring mismatch, zero input, non-total order, point outside a polytope, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A computation hit a documented size ceiling.
class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace torideg
