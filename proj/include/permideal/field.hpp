#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace permideal {

/// Coefficients are GMP rationals. Over a prime field they are kept as the
/// integer representative in [0, p).
using Scalar = mpq_class;

/// The coefficient field: the rationals or F_p.
class FieldSpec {
 public:
  FieldSpec() = default;  // rationals

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws RangeError unless p is a prime below 2^31.
  static FieldSpec prime_field(std::uint32_t p);
  /// Parses "q" / "Q" or "fp:<p>" / "Fp:<p>".
  static FieldSpec parse(const std::string& text);

  std::uint32_t characteristic() const { return p_; }
  bool is_rationals() const { return p_ == 0; }
  /// "Q" or "Fp:<p>".
  std::string name() const;

  Scalar from_int(long value) const;
  /// num/den reduced into the field; throws RangeError when den vanishes in it.
  Scalar from_fraction(const mpz_class& num, const mpz_class& den) const;
  Scalar normalize(const Scalar& value) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws std::domain_error on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// True when 2 has an inverse, i.e. the characteristic is not 2.
  bool two_is_unit() const { return p_ != 2; }

  /// Printed form: rationals as "a" or "a/b"; F_p with the symmetric
  /// representative in (-p/2, p/2].
  std::string format(const Scalar& value) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  void reduce_in_place(mpz_class& value) const;

  std::uint32_t p_ = 0;
};

bool is_prime(std::uint32_t value);

}  // namespace permideal
