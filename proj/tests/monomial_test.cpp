#include <gtest/gtest.h>

#include "permideal/errors.hpp"
#include "test_support.hpp"

namespace permideal {
namespace {

using testing::RandomPolys;

TEST(MonomialTest, Basics) {
  const Shape s(2, 3);
  const Monomial a = Monomial::variable(s, VarRef::matrix(1, 2), 2);
  const Monomial b = Monomial::variable(s, VarRef::matrix(2, 3));
  const Monomial ab = a * b;
  EXPECT_EQ(ab.degree(), 3u);
  EXPECT_EQ(ab.exponent(VarRef::matrix(1, 2)), 2u);
  EXPECT_TRUE(a.divides(ab));
  EXPECT_FALSE(ab.divides(a));
  EXPECT_EQ(ab / a, b);
  EXPECT_THROW(a / b, PatternError);
  EXPECT_FALSE(a.is_squarefree());
  EXPECT_TRUE(b.is_squarefree());
  EXPECT_TRUE(a.coprime(b));
  EXPECT_TRUE(Monomial(s).is_one());
  EXPECT_FALSE(ab.uses_elim());
  EXPECT_TRUE(Monomial::variable(s, VarRef::elim()).uses_elim());
  const auto support = ab.support();
  ASSERT_EQ(support.size(), 2u);
  EXPECT_EQ(support[0].first, VarRef::matrix(1, 2));
  EXPECT_EQ(support[0].second, 2u);
}

TEST(MonomialTest, ShapeMismatchThrows) {
  const Monomial a = Monomial::variable(Shape(2, 2), VarRef::matrix(1, 1));
  const Monomial b = Monomial::variable(Shape(2, 3), VarRef::matrix(1, 1));
  EXPECT_THROW(a * b, ShapeMismatch);
  EXPECT_THROW(a.lcm(b), ShapeMismatch);
  EXPECT_THROW((void)a.divides(b), ShapeMismatch);
}

TEST(MonomialTest, ExponentOverflowThrows) {
  const Shape s(2, 2);
  const Monomial a = Monomial::variable(s, VarRef::matrix(1, 1), 200);
  EXPECT_THROW(a * a, RangeError);
}

TEST(MonomialPropertyTest, MonoidAndLatticeLaws) {
  RandomPolys gen(testing::rational_ring(3, 3), 7);
  for (int k = 0; k < 500; ++k) {
    const Monomial a = gen.monomial(5, true);
    const Monomial b = gen.monomial(5, true);
    const Monomial c = gen.monomial(5, true);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
    EXPECT_EQ((a * b) / b, a);
    const Monomial l = a.lcm(b);
    EXPECT_TRUE(a.divides(l));
    EXPECT_TRUE(b.divides(l));
    EXPECT_EQ(l, b.lcm(a));
    EXPECT_LE(l.degree(), a.degree() + b.degree());
    EXPECT_EQ(a.coprime(b), l == a * b);
    EXPECT_TRUE(l.divides(a * b));
    if (a.divides(b)) {
      EXPECT_EQ(l, b);
    }
    const Monomial a2 = Monomial::from_powers(a.shape(), a.support());
    EXPECT_EQ(a2, a);
    EXPECT_EQ(a2.hash(), a.hash());
  }
}

}  // namespace
}  // namespace permideal
