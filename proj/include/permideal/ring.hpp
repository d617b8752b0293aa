#pragma once

#include <compare>
#include <cstddef>
#include <string>

#include "permideal/field.hpp"

namespace permideal {

/// Dimensions of the generic matrix. Both sides must be at least 2.
struct Shape {
  int m = 2;
  int n = 2;

  Shape() = default;
  /// Throws RangeError when m < 2 or n < 2.
  Shape(int rows, int cols);

  std::size_t matrix_vars() const { return static_cast<std::size_t>(m) * n; }
  /// Matrix variables plus the elimination variable.
  std::size_t num_vars() const { return matrix_vars() + 1; }
  std::size_t elim_index() const { return matrix_vars(); }

  std::string to_string() const;

  friend auto operator<=>(const Shape&, const Shape&) = default;
};

/// A ring variable: either the matrix entry x[row, col] (one-based) or the
/// elimination variable t.
struct VarRef {
  enum class Kind { Matrix, Elim };

  Kind kind = Kind::Matrix;
  int row = 0;
  int col = 0;

  static VarRef matrix(int row, int col) { return {Kind::Matrix, row, col}; }
  static VarRef elim() { return {Kind::Elim, 0, 0}; }

  bool is_elim() const { return kind == Kind::Elim; }

  /// Row-major index; t comes after every matrix variable.
  std::size_t index(const Shape& shape) const;
  static VarRef from_index(const Shape& shape, std::size_t index);

  std::string to_string() const;

  friend auto operator<=>(const VarRef&, const VarRef&) = default;
};

/// The ambient polynomial ring F[x_ij, t] of a shape over a field.
struct Ring {
  Shape shape;
  FieldSpec field;

  Ring() = default;
  /// Throws RangeError if the shape has too many variables for a monomial.
  Ring(Shape s, FieldSpec f);

  friend bool operator==(const Ring&, const Ring&) = default;
};

/// Throws ShapeMismatch / FieldMismatch when the rings differ.
void require_same_ring(const Ring& a, const Ring& b);

}  // namespace permideal
