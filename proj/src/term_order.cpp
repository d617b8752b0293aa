#include "permideal/term_order.hpp"

#include "permideal/errors.hpp"

namespace permideal {

TermOrder TermOrder::parse(const std::string& name) {
  if (name == "diag-lex") return diag_lex();
  if (name == "diag-lex-T") return diag_lex_transpose();
  throw RangeError("unknown term order '" + name + "' (expected diag-lex or diag-lex-T)");
}

std::string TermOrder::name() const {
  const std::string base = base_ == Base::DiagLex ? "diag-lex" : "diag-lex-T";
  return elim_ ? "elim(" + base + ")" : base;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  const Shape shape = a.shape();
  if (shape != b.shape()) {
    throw ShapeMismatch("cannot compare monomials from " + shape.to_string() + " and " +
                        b.shape().to_string());
  }
  const std::size_t t = shape.elim_index();
  if (elim_ && a.exponent(t) != b.exponent(t)) return a.exponent(t) <=> b.exponent(t);

  // Walk variables from largest to smallest; the first differing exponent decides.
  if (base_ == Base::DiagLex) {
    // Larger column is larger; within a column, larger row is larger.
    for (int col = shape.n; col >= 1; --col) {
      for (int row = shape.m; row >= 1; --row) {
        const std::size_t v = static_cast<std::size_t>(row - 1) * shape.n + (col - 1);
        if (a.exponent(v) != b.exponent(v)) return a.exponent(v) <=> b.exponent(v);
      }
    }
  } else {
    // Larger row is larger; within a row, larger column: reverse row-major index.
    for (std::size_t v = shape.matrix_vars(); v-- > 0;) {
      if (a.exponent(v) != b.exponent(v)) return a.exponent(v) <=> b.exponent(v);
    }
  }
  if (!elim_ && a.exponent(t) != b.exponent(t)) return a.exponent(t) <=> b.exponent(t);
  return std::strong_ordering::equal;
}

}  // namespace permideal
