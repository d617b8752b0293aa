#include "permideal/monomial.hpp"

#include <algorithm>

#include "permideal/errors.hpp"

namespace permideal {

Monomial::Monomial(const Shape& shape)
    : m_(static_cast<std::uint8_t>(shape.m)), n_(static_cast<std::uint8_t>(shape.n)) {
  if (shape.num_vars() > kMaxVars) {
    throw RangeError("shape " + shape.to_string() + " has too many variables for a monomial");
  }
}

Monomial Monomial::variable(const Shape& shape, VarRef var, unsigned exponent) {
  return from_powers(shape, {{var, exponent}});
}

Monomial Monomial::from_powers(const Shape& shape,
                               const std::vector<std::pair<VarRef, unsigned>>& powers) {
  Monomial result(shape);
  for (const auto& [var, e] : powers) {
    const std::size_t idx = var.index(shape);
    const unsigned total = result.exp_[idx] + e;
    if (total > kMaxExponent) throw RangeError("exponent overflow");
    result.exp_[idx] = static_cast<std::uint8_t>(total);
    result.degree_ = static_cast<std::uint16_t>(result.degree_ + e);
  }
  return result;
}

unsigned Monomial::exponent(VarRef var) const {
  return exp_[var.index(shape())];
}

bool Monomial::is_squarefree() const {
  return std::all_of(exp_.begin(), exp_.end(), [](std::uint8_t e) { return e <= 1; });
}

void Monomial::require_same_shape(const Monomial& other) const {
  if (m_ != other.m_ || n_ != other.n_) {
    throw ShapeMismatch("monomials from different shapes: " + shape().to_string() + " vs " +
                        other.shape().to_string());
  }
}

bool Monomial::divides(const Monomial& other) const {
  require_same_shape(other);
  if (degree_ > other.degree_) return false;
  const std::size_t nv = num_vars();
  for (std::size_t i = 0; i < nv; ++i) {
    if (exp_[i] > other.exp_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  require_same_shape(other);
  const std::size_t nv = num_vars();
  for (std::size_t i = 0; i < nv; ++i) {
    if (exp_[i] != 0 && other.exp_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_shape(other);
  Monomial result = *this;
  const std::size_t nv = num_vars();
  for (std::size_t i = 0; i < nv; ++i) {
    const unsigned e = exp_[i] + other.exp_[i];
    if (e > kMaxExponent) throw RangeError("exponent overflow");
    result.exp_[i] = static_cast<std::uint8_t>(e);
  }
  result.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return result;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw PatternError("monomial does not divide");
  Monomial result = *this;
  const std::size_t nv = num_vars();
  for (std::size_t i = 0; i < nv; ++i) {
    result.exp_[i] = static_cast<std::uint8_t>(exp_[i] - divisor.exp_[i]);
  }
  result.degree_ = static_cast<std::uint16_t>(degree_ - divisor.degree_);
  return result;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_shape(other);
  Monomial result = *this;
  unsigned degree = 0;
  const std::size_t nv = num_vars();
  for (std::size_t i = 0; i < nv; ++i) {
    result.exp_[i] = std::max(exp_[i], other.exp_[i]);
    degree += result.exp_[i];
  }
  result.degree_ = static_cast<std::uint16_t>(degree);
  return result;
}

std::vector<std::pair<VarRef, unsigned>> Monomial::support() const {
  std::vector<std::pair<VarRef, unsigned>> out;
  const Shape s = shape();
  const std::size_t nv = num_vars();
  for (std::size_t i = 0; i < nv; ++i) {
    if (exp_[i] != 0) out.emplace_back(VarRef::from_index(s, i), exp_[i]);
  }
  return out;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  const std::size_t nv = num_vars();
  for (std::size_t i = 0; i < nv; ++i) {
    h ^= exp_[i];
    h *= 1099511628211ull;
  }
  return h ^ (static_cast<std::size_t>(m_) << 8 | n_);
}

}  // namespace permideal
