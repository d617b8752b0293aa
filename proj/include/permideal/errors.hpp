#pragma once

#include <stdexcept>
#include <string>

namespace permideal {

/// Base class for every error raised by the library.
class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ShapeMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

class FieldMismatch : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Raised when an operation needs a nonzero polynomial.
class EmptyPolynomial : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Requested operation is not defined for the field (e.g. halving in characteristic 2).
class UnsupportedField : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Index tuples that do not form the pattern an operation requires.
class PatternError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Out-of-range shape, index or parameter.
class RangeError : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

}  // namespace permideal
