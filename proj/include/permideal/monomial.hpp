#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "permideal/ring.hpp"

namespace permideal {

/// A power product over the variables of a shape.
///
/// Exponents are stored densely in row-major variable order with the
/// elimination variable last; absent variables simply have exponent zero, so
/// equality of monomials is equality of their exponent maps. The owning shape
/// is recorded and checked on every binary operation.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 60;
  static constexpr unsigned kMaxExponent = 255;

  /// The monomial 1.
  explicit Monomial(const Shape& shape);

  static Monomial variable(const Shape& shape, VarRef var, unsigned exponent = 1);
  /// Builds from (variable, exponent) pairs; exponents of repeated variables add up.
  static Monomial from_powers(const Shape& shape,
                              const std::vector<std::pair<VarRef, unsigned>>& powers);

  Shape shape() const { return Shape(m_, n_); }
  std::size_t num_vars() const { return static_cast<std::size_t>(m_) * n_ + 1; }

  unsigned exponent(std::size_t var_index) const { return exp_[var_index]; }
  unsigned exponent(VarRef var) const;
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  bool uses_elim() const { return exp_[num_vars() - 1] != 0; }
  bool is_squarefree() const;

  /// True when this monomial divides `other`.
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Requires divisor | *this; throws PatternError otherwise.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;

  /// Variables with positive exponent, in row-major order (t last).
  std::vector<std::pair<VarRef, unsigned>> support() const;

  std::size_t hash() const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.m_ == b.m_ && a.n_ == b.n_ && a.exp_ == b.exp_;
  }

 private:
  void require_same_shape(const Monomial& other) const;

  std::array<std::uint8_t, kMaxVars> exp_{};
  std::uint8_t m_ = 0;
  std::uint8_t n_ = 0;
  std::uint16_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace permideal
