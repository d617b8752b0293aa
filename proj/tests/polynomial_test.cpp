#include <gtest/gtest.h>

#include "permideal/errors.hpp"
#include "permideal/permanental.hpp"
#include "test_support.hpp"

namespace permideal {
namespace {

using testing::RandomPolys;
using testing::x;

TEST(PolynomialTest, ConstructionAndPrinting) {
  const Ring ring = testing::rational_ring(2, 2);
  const Polynomial p = x(ring, 1, 1) * x(ring, 2, 2) + x(ring, 1, 2) * x(ring, 2, 1);
  EXPECT_EQ(p.to_string(), "x[1,1]*x[2,2] + x[1,2]*x[2,1]");
  EXPECT_EQ(Polynomial(ring).to_string(), "0");
  const Polynomial q = x(ring, 1, 1).pow(2).scale(Scalar(3, 2)) - Polynomial::constant(ring, 4);
  EXPECT_EQ(q.to_string(), "3/2*x[1,1]^2 - 4");
  EXPECT_EQ((-x(ring, 2, 1)).to_string(), "-x[2,1]");
  EXPECT_EQ(Polynomial::variable(ring, VarRef::elim()).to_string(), "t");
}

TEST(PolynomialTest, Queries) {
  const Ring ring = testing::rational_ring(2, 3);
  const Polynomial p = x(ring, 1, 1) * x(ring, 2, 2) + x(ring, 1, 3);
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_FALSE(p.is_homogeneous());
  EXPECT_TRUE((p - x(ring, 1, 3)).is_homogeneous());
  EXPECT_TRUE((p - x(ring, 1, 3)).is_monomial());
  EXPECT_TRUE(Polynomial::constant(ring, 5).is_constant());
  EXPECT_TRUE(Polynomial(ring).is_zero());
  EXPECT_THROW(Polynomial(ring).leading_term(TermOrder::diag_lex()), EmptyPolynomial);
  const Polynomial t = Polynomial::variable(ring, VarRef::elim());
  EXPECT_TRUE((p * t).uses_elim());
  EXPECT_EQ((p * t).leading_term(TermOrder::diag_lex()).monomial,
            (x(ring, 1, 3) * t).terms().front().monomial);
  EXPECT_EQ(p.scale(2).monic(TermOrder::diag_lex()),
            p.monic(TermOrder::diag_lex()));
}

TEST(PolynomialTest, FromTermsMergesAndDropsZeros) {
  const Ring ring = testing::rational_ring(2, 2);
  const Monomial m = Monomial::variable(ring.shape, VarRef::matrix(1, 1));
  const Polynomial p = Polynomial::from_terms(ring, {{m, 2}, {m, -2}});
  EXPECT_TRUE(p.is_zero());
  const Polynomial q = Polynomial::from_terms(ring, {{m, 1}, {m, 1}});
  EXPECT_EQ(q, x(ring, 1, 1).scale(2));
}

TEST(PolynomialTest, PrimeFieldCoefficientsReduce) {
  const Ring ring(Shape(2, 2), FieldSpec::prime_field(3));
  const Polynomial p = x(ring, 1, 1).scale(ring.field.from_int(2));
  EXPECT_TRUE((p + p + p).is_zero());
  EXPECT_EQ(p.to_string(), "-x[1,1]");
}

TEST(PolynomialTest, MixedRingsThrow) {
  const Ring a = testing::rational_ring(2, 2);
  const Ring b = testing::rational_ring(2, 3);
  EXPECT_THROW(x(a, 1, 1) + x(b, 1, 1), ShapeMismatch);
  const Ring c(Shape(2, 2), FieldSpec::prime_field(5));
  EXPECT_THROW(x(a, 1, 1) * x(c, 1, 1), FieldMismatch);
}

TEST(PolynomialTest, PermanentSquareExpansion) {
  const Ring ring = testing::rational_ring(2, 2);
  const Polynomial p = permanent(ring, {1, 2}, {1, 2});
  const Polynomial a = x(ring, 1, 1) * x(ring, 2, 2);
  const Polynomial b = x(ring, 1, 2) * x(ring, 2, 1);
  EXPECT_EQ(p.pow(2), a * a + a * b.scale(2) + b * b);
}

class RingAxioms : public ::testing::TestWithParam<std::string> {};

TEST_P(RingAxioms, HoldOnRandomPolynomials) {
  RandomPolys gen(Ring(Shape(2, 3), FieldSpec::parse(GetParam())), 17);
  const Ring& ring = gen.ring();
  const Polynomial zero(ring);
  const Polynomial one = Polynomial::constant(ring, 1);
  for (int k = 0; k < 150; ++k) {
    const Polynomial a = gen.polynomial(5, 3, true);
    const Polynomial b = gen.polynomial(5, 3, true);
    const Polynomial c = gen.polynomial(5, 3, true);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a - b, a + (-b));
    EXPECT_TRUE((a * zero).is_zero());
    EXPECT_EQ(a.pow(2), a * a);
    if (!a.is_zero() && !b.is_zero()) {
      EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
      for (const auto& order : {TermOrder::diag_lex(), TermOrder::diag_lex_transpose()}) {
        // Leading monomials multiply.
        EXPECT_EQ((a * b).leading_term(order).monomial,
                  a.leading_term(order).monomial * b.leading_term(order).monomial);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, RingAxioms, ::testing::Values("q", "fp:3", "fp:5", "fp:2"));

}  // namespace
}  // namespace permideal
