#include <gtest/gtest.h>

#include "permideal/errors.hpp"
#include "permideal/ring.hpp"

namespace permideal {
namespace {

TEST(ShapeTest, RejectsDegenerateShapes) {
  EXPECT_THROW(Shape(1, 3), RangeError);
  EXPECT_THROW(Shape(3, 1), RangeError);
  EXPECT_EQ(Shape(3, 4).to_string(), "3x4");
  EXPECT_EQ(Shape(3, 4).num_vars(), 13u);
}

TEST(VarRefTest, IndexRoundTrip) {
  const Shape s(3, 4);
  for (std::size_t k = 0; k < s.num_vars(); ++k) {
    const VarRef v = VarRef::from_index(s, k);
    EXPECT_EQ(v.index(s), k);
  }
  EXPECT_TRUE(VarRef::from_index(s, 12).is_elim());
  EXPECT_EQ(VarRef::matrix(2, 3).index(s), 6u);
  EXPECT_EQ(VarRef::matrix(2, 3).to_string(), "x[2,3]");
  EXPECT_EQ(VarRef::elim().to_string(), "t");
  EXPECT_THROW(VarRef::matrix(4, 1).index(s), RangeError);
  EXPECT_THROW(VarRef::from_index(s, 13), RangeError);
}

TEST(RingTest, LimitsVariableCount) {
  EXPECT_NO_THROW(Ring(Shape(7, 8), FieldSpec::rationals()));
  EXPECT_THROW(Ring(Shape(8, 8), FieldSpec::rationals()), RangeError);
}

TEST(RingTest, SameRingChecks) {
  const Ring a(Shape(3, 3), FieldSpec::rationals());
  EXPECT_NO_THROW(require_same_ring(a, a));
  EXPECT_THROW(require_same_ring(a, Ring(Shape(3, 4), FieldSpec::rationals())), ShapeMismatch);
  EXPECT_THROW(require_same_ring(a, Ring(Shape(3, 3), FieldSpec::prime_field(5))), FieldMismatch);
}

}  // namespace
}  // namespace permideal
