#pragma once

#include <string>
#include <vector>

#include "permideal/field.hpp"
#include "permideal/monomial.hpp"
#include "permideal/ring.hpp"
#include "permideal/term_order.hpp"

namespace permideal {

struct Term {
  Monomial monomial;
  Scalar coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// A sparse polynomial in the ring of a shape.
///
/// Terms are kept strictly descending in the storage order with no zero
/// coefficients, so structural equality is polynomial equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(const Ring& ring, long value);
  static Polynomial constant(const Ring& ring, const Scalar& value);
  static Polynomial variable(const Ring& ring, VarRef var);
  static Polynomial entry(const Ring& ring, int row, int col) {
    return variable(ring, VarRef::matrix(row, col));
  }
  static Polynomial term(const Ring& ring, const Monomial& monomial, const Scalar& coeff);
  /// Sorts, merges duplicate monomials and drops zero coefficients.
  static Polynomial from_terms(const Ring& ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Single-term polynomial.
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  bool uses_elim() const;
  /// Highest total degree of a term; 0 for the zero polynomial.
  unsigned degree() const;
  bool is_homogeneous() const;

  /// Order-maximal term. Throws EmptyPolynomial on zero.
  const Term& leading_term(const TermOrder& order) const;
  /// Divides by the leading coefficient. Throws EmptyPolynomial on zero.
  Polynomial monic(const TermOrder& order) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial scale(const Scalar& factor) const;
  Polynomial times(const Monomial& monomial, const Scalar& coeff) const;
  Polynomial pow(unsigned exponent) const;

  /// Canonical text: terms descending under `order` (default DiagLex).
  std::string to_string(const TermOrder& order = TermOrder::diag_lex()) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.ring_ == b.ring_ && a.terms_ == b.terms_;
  }

 private:
  Ring ring_;
  std::vector<Term> terms_;
};

inline const Term& leading_term(const TermOrder& order, const Polynomial& f) {
  return f.leading_term(order);
}

}  // namespace permideal
