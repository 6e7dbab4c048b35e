#pragma once

#include <stdexcept>
#include <string>

namespace pdnf {

/// Base class for every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different ambient dimensions or have incompatible shapes.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold for its input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Two fields that must commute do not; degree() is the lowest degree with a
/// nonzero bracket term.
class CommutationError : public PreconditionError {
 public:
  CommutationError(const std::string& what, unsigned degree) : PreconditionError(what), degree_(degree) {}
  unsigned degree() const { return degree_; }

 private:
  unsigned degree_;
};

/// The field has a vanishing linear part, so normal-form theory says nothing.
class DegenerateLinearPartError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// An internal invariant failed. Indicates a bug, not bad input.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace pdnf
