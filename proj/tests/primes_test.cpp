#include <gtest/gtest.h>

#include <random>

#include "permideal/permanental.hpp"
#include "permideal/primes.hpp"
#include "test_support.hpp"

namespace permideal {
namespace {

using testing::RandomPolys;
using testing::x;

std::vector<Ideal> prime_ideals(const Ring& ring) {
  std::vector<Ideal> out;
  for (const auto& p : minimal_primes(ring.shape)) out.push_back(p.generators(ring));
  return out;
}

TEST(PrimesTest, Enumeration) {
  EXPECT_EQ(minimal_primes(Shape(2, 2)).size(), 1u);
  EXPECT_EQ(minimal_primes(Shape(2, 3)).size(), 5u);
  EXPECT_EQ(minimal_primes(Shape(3, 3)).size(), 15u);
  EXPECT_EQ(minimal_primes(Shape(3, 4)).size(), 25u);
  EXPECT_EQ(minimal_primes(Shape(4, 4)).size(), 44u);
  const auto primes = minimal_primes(Shape(3, 3));
  EXPECT_EQ(primes.front().kind, MinimalPrime::Kind::RowComplement);
  EXPECT_EQ(primes.front().describe(), "all rows except 1");
  EXPECT_EQ(primes[3].describe(), "all columns except 1");
  EXPECT_EQ(primes[6].describe(), "block rows {1,2} cols {1,2}");
}

TEST(PrimesTest, HeightsMatchFormula) {
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{2, 3}, {3, 3}, {3, 4}, {4, 4}}) {
    const Shape shape(m, n);
    for (const auto& p : minimal_primes(shape)) {
      EXPECT_EQ(p.height(shape), height_formula(p.kind, shape));
      EXPECT_EQ(static_cast<int>(p.variables(shape).size()),
                p.kind == MinimalPrime::Kind::Block ? m * n - 4 : p.height(shape));
    }
  }
  EXPECT_EQ(height_formula(MinimalPrime::Kind::RowComplement, Shape(3, 4)), 8);
  EXPECT_EQ(height_formula(MinimalPrime::Kind::ColComplement, Shape(3, 4)), 9);
  EXPECT_EQ(height_formula(MinimalPrime::Kind::Block, Shape(3, 4)), 9);
}

TEST(PrimesTest, EachPrimeContainsTheIdeal) {
  const Ring ring = testing::rational_ring(3, 3);
  const Ideal p2 = permanental_ideal(ring);
  for (const auto& prime : prime_ideals(ring)) EXPECT_TRUE(ideal_contains(prime, p2));
}

// Two rows and three columns: the complement-of-a-row primes and the three
// block primes already intersect to the permanental ideal, and none of the
// five can be dropped.
TEST(PrimesTest, TwoByThreeHasFiveComponents) {
  const Ring ring = testing::rational_ring(2, 3);
  const auto primes = prime_ideals(ring);
  ASSERT_EQ(primes.size(), 5u);
  const Ideal p2 = permanental_ideal(ring);
  EXPECT_TRUE(ideal_equal(intersect_all(primes), p2));
  for (std::size_t skip = 0; skip < primes.size(); ++skip) {
    std::vector<Ideal> rest;
    for (std::size_t k = 0; k < primes.size(); ++k) {
      if (k != skip) rest.push_back(primes[k]);
    }
    EXPECT_FALSE(ideal_equal(intersect_all(rest), p2)) << "prime " << skip << " is redundant";
  }
  // The counting formula says six.
  EXPECT_EQ(component_count(ring.shape), 6u);
}

TEST(PrimesTest, QuadricRank) {
  const Ring ring = testing::rational_ring(3, 3);
  for (const auto& g : permanental_ideal(ring).generators()) EXPECT_EQ(quadratic_form_rank(g), 4);
  EXPECT_EQ(quadratic_form_rank(x(ring, 1, 1).pow(2)), 1);
  EXPECT_EQ(quadratic_form_rank(x(ring, 1, 1) * x(ring, 1, 2)), 2);
  const Ring f2(Shape(3, 3), FieldSpec::prime_field(2));
  EXPECT_THROW(quadratic_form_rank(x(f2, 1, 1) * x(f2, 2, 2)), UnsupportedField);
}

TEST(PrimesTest, LinearFormsAgreeWithMembership) {
  RandomPolys gen(testing::rational_ring(3, 3), 13);
  const auto primes = minimal_primes(gen.ring().shape);
  for (int k = 0; k < 40; ++k) {
    LinearForm form;
    const int count = gen.uniform(1, 4);
    for (int j = 0; j < count; ++j) {
      const VarRef v = gen.variable();
      form.coeffs[{v.row, v.col}] = Scalar(gen.uniform(1, 5));
    }
    const Polynomial f = form.to_polynomial(gen.ring());
    for (const auto& prime : primes) {
      EXPECT_EQ(linear_form_in_prime(form, prime), ideal_member(f, prime.generators(gen.ring())))
          << prime.describe() << " " << f.to_string();
    }
  }
  const LinearForm ones = LinearForm::all_ones(gen.ring().shape);
  EXPECT_TRUE(ones.has_nonzero(3, 3));
  for (const auto& prime : primes) EXPECT_FALSE(linear_form_in_prime(ones, prime));
}

TEST(NiermannTest, SinglePair) {
  const Ring ring = testing::rational_ring(2, 2);
  const std::vector<std::pair<Ideal, Ideal>> pairs{
      {Ideal(ring, {x(ring, 1, 1)}), Ideal(ring, {x(ring, 2, 2)})}};
  EXPECT_TRUE(niermann_check(pairs));
}

TEST(NiermannTest, VariableIdeals) {
  const Ring ring = testing::rational_ring(2, 2);
  // I_1 = <x11>, I_2 = <x12>, J_1 ⊇ I_2, J_2 ⊇ I_1.
  const std::vector<std::pair<Ideal, Ideal>> pairs{
      {Ideal(ring, {x(ring, 1, 1)}), Ideal(ring, {x(ring, 1, 2), x(ring, 2, 1)})},
      {Ideal(ring, {x(ring, 1, 2)}), Ideal(ring, {x(ring, 1, 1), x(ring, 2, 2)})}};
  EXPECT_TRUE(niermann_check(pairs));
}

TEST(NiermannTest, ViolationAndEmpty) {
  const Ring ring = testing::rational_ring(2, 2);
  const std::vector<std::pair<Ideal, Ideal>> bad{
      {Ideal(ring, {x(ring, 1, 1)}), Ideal(ring, {x(ring, 2, 2)})},
      {Ideal(ring, {x(ring, 1, 2)}), Ideal(ring, {x(ring, 2, 1)})}};
  EXPECT_THROW(niermann_check(bad), HypothesisViolation);
  EXPECT_THROW(niermann_check(std::vector<std::pair<Ideal, Ideal>>{}), PatternError);
}

TEST(NiermannTest, BlockInstanceGivesThirdUnmixedPart) {
  const Ring ring = testing::rational_ring(3, 3);
  const auto pairs = block_niermann_pairs(ring);
  EXPECT_EQ(pairs.size(), 9u);
  EXPECT_TRUE(niermann_check(pairs));
  std::vector<Ideal> blocks;
  for (const auto& prime : minimal_primes(ring.shape)) {
    if (prime.kind == MinimalPrime::Kind::Block) blocks.push_back(prime.generators(ring));
  }
  EXPECT_TRUE(ideal_equal(intersect_all(blocks), unmixed_part(ring, 3)));
}

TEST(NiermannTest, RandomInstancesSatisfyTheIdentity) {
  RandomPolys gen(testing::rational_ring(2, 2), 101);
  for (int trial = 0; trial < 20; ++trial) {
    const int count = gen.uniform(2, 3);
    std::vector<Ideal> is;
    for (int k = 0; k < count; ++k) {
      is.emplace_back(gen.ring(), std::vector<Polynomial>{gen.monomial_poly(
                                      static_cast<unsigned>(gen.uniform(1, 2)))});
    }
    std::vector<std::pair<Ideal, Ideal>> pairs;
    for (int j = 0; j < count; ++j) {
      std::vector<Polynomial> gens;
      for (int i = 0; i < count; ++i) {
        if (i != j) gens.insert(gens.end(), is[static_cast<std::size_t>(i)].generators().begin(),
                                is[static_cast<std::size_t>(i)].generators().end());
      }
      if (gen.uniform(0, 1) == 1) gens.push_back(gen.nonzero(2, 2));
      pairs.emplace_back(is[static_cast<std::size_t>(j)], Ideal(gen.ring(), gens));
    }
    EXPECT_TRUE(niermann_check(pairs)) << "trial " << trial;
  }
}

}  // namespace
}  // namespace permideal
