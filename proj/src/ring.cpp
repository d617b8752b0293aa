#include "permideal/ring.hpp"

#include "permideal/errors.hpp"
#include "permideal/monomial.hpp"

namespace permideal {

Shape::Shape(int rows, int cols) : m(rows), n(cols) {
  if (rows < 2 || cols < 2) {
    throw RangeError("shape needs m >= 2 and n >= 2, got " + std::to_string(rows) + "x" +
                     std::to_string(cols));
  }
}

std::string Shape::to_string() const {
  return std::to_string(m) + "x" + std::to_string(n);
}

std::size_t VarRef::index(const Shape& shape) const {
  if (is_elim()) return shape.elim_index();
  if (row < 1 || row > shape.m || col < 1 || col > shape.n) {
    throw RangeError("variable " + to_string() + " outside " + shape.to_string() + " matrix");
  }
  return static_cast<std::size_t>(row - 1) * shape.n + (col - 1);
}

VarRef VarRef::from_index(const Shape& shape, std::size_t index) {
  if (index == shape.elim_index()) return elim();
  if (index > shape.elim_index()) throw RangeError("variable index out of range");
  return matrix(static_cast<int>(index / shape.n) + 1, static_cast<int>(index % shape.n) + 1);
}

std::string VarRef::to_string() const {
  if (is_elim()) return "t";
  return "x[" + std::to_string(row) + "," + std::to_string(col) + "]";
}

Ring::Ring(Shape s, FieldSpec f) : shape(s), field(f) {
  if (shape.num_vars() > Monomial::kMaxVars) {
    throw RangeError("shape " + shape.to_string() + " has too many variables (max " +
                     std::to_string(Monomial::kMaxVars - 1) + " matrix entries)");
  }
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (a.shape != b.shape) {
    throw ShapeMismatch("shape mismatch: " + a.shape.to_string() + " vs " + b.shape.to_string());
  }
  if (!(a.field == b.field)) {
    throw FieldMismatch("field mismatch: " + a.field.name() + " vs " + b.field.name());
  }
}

}  // namespace permideal
