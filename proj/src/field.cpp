#include "permideal/field.hpp"

#include <cctype>
#include <stdexcept>

#include "permideal/errors.hpp"

namespace permideal {

bool is_prime(std::uint32_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw RangeError("field characteristic must be a prime below 2^31, got " + std::to_string(p));
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string lower;
  for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "q") return rationals();
  if (lower.rfind("fp:", 0) == 0 && lower.size() > 3) {
    const std::string digits = lower.substr(3);
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw RangeError("bad field: " + text);
    }
    if (digits.size() > 10) throw RangeError("bad field: " + text);
    return prime_field(static_cast<std::uint32_t>(std::stoull(digits)));
  }
  throw RangeError("bad field '" + text + "' (expected q or fp:<p>)");
}

std::string FieldSpec::name() const {
  return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_);
}

void FieldSpec::reduce_in_place(mpz_class& value) const {
  mpz_fdiv_r_ui(value.get_mpz_t(), value.get_mpz_t(), p_);
}

Scalar FieldSpec::from_int(long value) const {
  if (p_ == 0) return Scalar(value);
  mpz_class v(value);
  reduce_in_place(v);
  return Scalar(v);
}

Scalar FieldSpec::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (p_ == 0) {
    if (den == 0) throw RangeError("zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
  }
  mpz_class d = den;
  reduce_in_place(d);
  if (d == 0) throw RangeError("denominator vanishes in " + name());
  mpz_class n = num;
  reduce_in_place(n);
  mpz_class d_inv;
  mpz_invert(d_inv.get_mpz_t(), d.get_mpz_t(), mpz_class(p_).get_mpz_t());
  mpz_class r = n * d_inv;
  reduce_in_place(r);
  return Scalar(r);
}

Scalar FieldSpec::normalize(const Scalar& value) const {
  if (p_ == 0) return value;
  return from_fraction(value.get_num(), value.get_den());
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  if (r >= p_) r -= p_;
  return Scalar(r);
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  if (r < 0) r += p_;
  return Scalar(r);
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  mpz_class r = a.get_num() * b.get_num();
  reduce_in_place(r);
  return Scalar(r);
}

Scalar FieldSpec::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  if (a == 0) return a;
  return Scalar(mpz_class(p_) - a.get_num());
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), mpz_class(p_).get_mpz_t());
  return Scalar(r);
}

std::string FieldSpec::format(const Scalar& value) const {
  if (p_ == 0) return value.get_str();
  mpz_class v = value.get_num();
  if (2 * v > p_) v -= p_;
  return v.get_str();
}

}  // namespace permideal
