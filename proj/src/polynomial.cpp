#include "permideal/polynomial.hpp"

#include <algorithm>

#include "permideal/errors.hpp"

namespace permideal {
namespace {

constexpr TermOrder kStorage = TermOrder::elim_block(TermOrder::diag_lex());

// Merge of a and (sign)·b, both sorted in storage order.
std::vector<Term> merge_terms(const FieldSpec& field, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering c = std::strong_ordering::equal;
    if (i == a.size()) {
      c = std::strong_ordering::less;
    } else if (j == b.size()) {
      c = std::strong_ordering::greater;
    } else {
      c = kStorage.compare(a[i].monomial, b[j].monomial);
    }
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].monomial, subtract ? field.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Scalar s = subtract ? field.sub(a[i].coeff, b[j].coeff) : field.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::constant(const Ring& ring, long value) {
  return term(ring, Monomial(ring.shape), ring.field.from_int(value));
}

Polynomial Polynomial::constant(const Ring& ring, const Scalar& value) {
  return term(ring, Monomial(ring.shape), ring.field.normalize(value));
}

Polynomial Polynomial::variable(const Ring& ring, VarRef var) {
  return term(ring, Monomial::variable(ring.shape, var), ring.field.from_int(1));
}

Polynomial Polynomial::term(const Ring& ring, const Monomial& monomial, const Scalar& coeff) {
  if (monomial.shape() != ring.shape) throw ShapeMismatch("monomial shape differs from ring");
  Polynomial p(ring);
  Scalar c = ring.field.normalize(coeff);
  if (c != 0) p.terms_.push_back({monomial, std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(const Ring& ring, std::vector<Term> terms) {
  for (auto& t : terms) {
    if (t.monomial.shape() != ring.shape) throw ShapeMismatch("monomial shape differs from ring");
    t.coeff = ring.field.normalize(t.coeff);
  }
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return kStorage.greater(a.monomial, b.monomial);
  });
  Polynomial p(ring);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
      p.terms_.back().coeff = ring.field.add(p.terms_.back().coeff, t.coeff);
      if (p.terms_.back().coeff == 0) p.terms_.pop_back();
    } else if (t.coeff != 0) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

bool Polynomial::uses_elim() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.monomial.uses_elim(); });
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const Term& t) {
    return t.monomial.degree() == terms_.front().monomial.degree();
  });
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
  if (terms_.empty()) throw EmptyPolynomial("leading term of the zero polynomial");
  if (order == kStorage || (!uses_elim() && order.base() == kStorage.base())) {
    return terms_.front();
  }
  const Term* best = &terms_.front();
  for (const auto& t : terms_) {
    if (order.greater(t.monomial, best->monomial)) best = &t;
  }
  return *best;
}

Polynomial Polynomial::monic(const TermOrder& order) const {
  const Scalar& lc = leading_term(order).coeff;
  return scale(ring_.field.inv(lc));
}

Polynomial Polynomial::operator-() const {
  Polynomial p(ring_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial, ring_.field.neg(t.coeff)});
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  Polynomial p(ring_);
  p.terms_ = merge_terms(ring_.field, terms_, other.terms_, false);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  Polynomial p(ring_);
  p.terms_ = merge_terms(ring_.field, terms_, other.terms_, true);
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_ring(ring_, other.ring_);
  std::vector<Term> products;
  products.reserve(terms_.size() * other.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : other.terms_) {
      products.push_back({a.monomial * b.monomial, ring_.field.mul(a.coeff, b.coeff)});
    }
  }
  return from_terms(ring_, std::move(products));
}

Polynomial Polynomial::scale(const Scalar& factor) const {
  const Scalar f = ring_.field.normalize(factor);
  Polynomial p(ring_);
  if (f == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.monomial, ring_.field.mul(t.coeff, f)});
  return p;
}

Polynomial Polynomial::times(const Monomial& monomial, const Scalar& coeff) const {
  // Lex orders are multiplicative, so the storage order survives.
  const Scalar c = ring_.field.normalize(coeff);
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    p.terms_.push_back({t.monomial * monomial, ring_.field.mul(t.coeff, c)});
  }
  return p;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string Polynomial::to_string(const TermOrder& order) const {
  if (terms_.empty()) return "0";
  std::vector<const Term*> sorted;
  sorted.reserve(terms_.size());
  for (const auto& t : terms_) sorted.push_back(&t);
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Term* a, const Term* b) {
    return order.greater(a->monomial, b->monomial);
  });

  std::string out;
  bool first = true;
  for (const Term* t : sorted) {
    std::string c = ring_.field.format(t->coeff);
    const bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    const auto support = t->monomial.support();
    if (support.empty()) {
      out += c;
      continue;
    }
    if (c != "1") out += c + "*";
    bool first_factor = true;
    for (const auto& [var, e] : support) {
      if (!first_factor) out += "*";
      first_factor = false;
      out += var.to_string();
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

}  // namespace permideal
