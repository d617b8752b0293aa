#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "permideal/permanental.hpp"
#include "permideal/poly_text.hpp"
#include "test_support.hpp"

namespace permideal {
namespace {

using testing::x;

std::set<std::string> as_text(const std::vector<Polynomial>& polys) {
  std::set<std::string> out;
  for (const auto& p : polys) out.insert(p.to_string());
  return out;
}

// Builds the claimed families straight from their index conventions.
std::vector<Polynomial> oracle_claimed(const Ring& ring, bool squarefree) {
  const int m = ring.shape.m;
  const int n = ring.shape.n;
  std::vector<Polynomial> out;
  for (int i = 1; i <= m; ++i)
    for (int k = i + 1; k <= m; ++k)
      for (int j = 1; j <= n; ++j)
        for (int l = j + 1; l <= n; ++l)
          out.push_back(x(ring, i, j) * x(ring, k, l) + x(ring, k, j) * x(ring, i, l));
  for (int i1 = 1; i1 <= m; ++i1)
    for (int i2 = 1; i2 < i1; ++i2)
      for (int j1 = 1; j1 <= n; ++j1)
        for (int j2 = j1 + 1; j2 <= n; ++j2)
          for (int j3 = j2 + 1; j3 <= n; ++j3) {
            out.push_back(x(ring, i1, j1) * x(ring, i1, j2) * x(ring, i2, j3));
            out.push_back(x(ring, i1, j1) * x(ring, i2, j2) * x(ring, i2, j3));
          }
  for (int j1 = 1; j1 <= n; ++j1)
    for (int j2 = 1; j2 < j1; ++j2)
      for (int i1 = 1; i1 <= m; ++i1)
        for (int i2 = i1 + 1; i2 <= m; ++i2)
          for (int i3 = i2 + 1; i3 <= m; ++i3) {
            out.push_back(x(ring, i1, j1) * x(ring, i2, j1) * x(ring, i3, j2));
            out.push_back(x(ring, i1, j1) * x(ring, i2, j2) * x(ring, i3, j2));
          }
  for (int i1 = 1; i1 <= m; ++i1)
    for (int i2 = i1 + 1; i2 <= m; ++i2)
      for (int i3 = i2 + 1; i3 <= m; ++i3)
        for (int j3 = 1; j3 <= n; ++j3)
          for (int j2 = j3 + 1; j2 <= n; ++j2)
            for (int j1 = j2 + 1; j1 <= n; ++j1) {
              const Polynomial a = x(ring, i1, j1);
              const Polynomial b = x(ring, i2, j2);
              const Polynomial c = x(ring, i3, j3);
              if (squarefree) {
                out.push_back(a * b * c);
              } else {
                out.push_back(a * a * b * c);
                out.push_back(a * b * b * c);
                out.push_back(a * b * c * c);
              }
            }
  return out;
}

TEST(PermanentalTest, PermanentValues) {
  const Ring ring = testing::rational_ring(3, 3);
  EXPECT_EQ(permanent(ring, {1, 2}, {1, 2}),
            parse_poly("x[1,1]*x[2,2] + x[1,2]*x[2,1]", ring));
  EXPECT_EQ(permanent(ring, {2}, {3}), x(ring, 2, 3));
  // 3x3 permanent has 6 terms, all with coefficient 1.
  const Polynomial p3 = permanent(ring, {1, 2, 3}, {1, 2, 3});
  EXPECT_EQ(p3.terms().size(), 6u);
  for (const auto& t : p3.terms()) EXPECT_EQ(t.coeff, Scalar(1));
  EXPECT_THROW(permanent(ring, {1, 2}, {1}), PatternError);
  EXPECT_THROW(permanent(ring, {1, 1}, {1, 2}), PatternError);
  EXPECT_THROW(permanent(ring, {1, 4}, {1, 2}), RangeError);
}

TEST(PermanentalTest, GeneratorCounts) {
  const Ring ring = testing::rational_ring(3, 3);
  EXPECT_EQ(permanental_ideal(testing::rational_ring(2, 2)).generators().size(), 1u);
  EXPECT_EQ(permanental_ideal(ring).generators().size(), 9u);
  EXPECT_EQ(permanental_ideal(testing::rational_ring(3, 4)).generators().size(), 18u);
  EXPECT_EQ(permanental_ideal(ring, 3).generators().size(), 1u);
  EXPECT_THROW(permanental_ideal(ring, 4), RangeError);
}

TEST(PermanentalTest, ClaimedBasisMatchesIndexOracle) {
  const std::map<std::pair<int, int>, std::uint64_t> frozen{
      {{2, 2}, 1}, {{2, 3}, 5}, {{3, 2}, 5}, {{3, 3}, 24}, {{3, 4}, 66}, {{4, 3}, 66},
      {{4, 4}, 180}};
  for (int m = 2; m <= 5; ++m) {
    for (int n = 2; n <= 5; ++n) {
      const Ring ring = testing::rational_ring(m, n);
      std::vector<Polynomial> claimed;
      for (const auto& e : claimed_gb(ring)) claimed.push_back(e.polynomial);
      const auto oracle = oracle_claimed(ring, false);
      EXPECT_EQ(claimed.size(), oracle.size());
      EXPECT_EQ(as_text(claimed), as_text(oracle)) << m << "x" << n;
      EXPECT_EQ(gb_count_formula(ring.shape), oracle.size());

      std::vector<Polynomial> radical;
      for (const auto& e : claimed_radical_gb(ring)) radical.push_back(e.polynomial);
      EXPECT_EQ(as_text(radical), as_text(oracle_claimed(ring, true)));
      EXPECT_EQ(radical_gb_count_formula(ring.shape), radical.size());

      const auto it = frozen.find({m, n});
      if (it != frozen.end()) EXPECT_EQ(gb_count_formula(ring.shape), it->second);
    }
  }
}

TEST(PermanentalTest, ClaimedElementsMatchTheirIndices) {
  const Ring ring = testing::rational_ring(4, 4);
  for (const auto& e : claimed_gb(ring)) {
    if (e.kind == ClaimedBasisElement::Kind::Permanent) {
      EXPECT_EQ(e.polynomial, permanent(ring, e.rows, e.cols));
    } else if (e.kind == ClaimedBasisElement::Kind::AntiDiagonal) {
      EXPECT_EQ(e.polynomial.terms().front().monomial.degree(), 4u);
      EXPECT_EQ(e.exponents[0] + e.exponents[1] + e.exponents[2], 4);
    } else {
      EXPECT_TRUE(e.polynomial.is_monomial());
      EXPECT_EQ(e.polynomial.degree(), 3u);
    }
  }
  EXPECT_EQ(to_string(ClaimedBasisElement::Kind::AntiDiagonal), "anti-diagonal");
}

TEST(PermanentalTest, BinomialsAndFormulas) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(2, 3), 0u);
  EXPECT_EQ(binomial(0, 0), 1u);
  EXPECT_EQ(component_count(Shape(2, 2)), 1u);
  EXPECT_EQ(component_count(Shape(2, 3)), 6u);
  EXPECT_EQ(component_count(Shape(3, 2)), 6u);
  EXPECT_EQ(component_count(Shape(3, 3)), 15u);
  EXPECT_EQ(component_count(Shape(3, 4)), 25u);
  EXPECT_EQ(component_count(Shape(4, 4)), 44u);
  EXPECT_EQ(gap_length_formula(Shape(2, 5)), 0u);
  EXPECT_EQ(gap_length_formula(Shape(3, 3)), 1u);
  EXPECT_EQ(gap_length_formula(Shape(3, 4)), 4u);
  EXPECT_EQ(gap_length_formula(Shape(4, 4)), 17u);
  EXPECT_EQ(radical_gb_count_formula(Shape(3, 3)), 22u);
}

// Squarefree triples with distinct rows and columns, by permutation search.
std::set<std::string> oracle_triples(const Ring& ring) {
  std::set<std::string> out;
  const int m = ring.shape.m;
  const int n = ring.shape.n;
  for (int a = 1; a <= m; ++a)
    for (int b = a + 1; b <= m; ++b)
      for (int c = b + 1; c <= m; ++c) {
        std::vector<int> cols(static_cast<std::size_t>(n));
        std::iota(cols.begin(), cols.end(), 1);
        std::set<std::set<std::pair<int, int>>> seen;
        do {
          seen.insert(std::set<std::pair<int, int>>{{a, cols[0]}, {b, cols[1]}, {c, cols[2]}});
        } while (std::next_permutation(cols.begin(), cols.end()));
        for (const auto& cells : seen) {
          Polynomial p = Polynomial::constant(ring, 1);
          for (const auto& [i, j] : cells) p = p * x(ring, i, j);
          out.insert(p.to_string());
        }
      }
  return out;
}

TEST(PermanentalTest, RadicalGenerators) {
  const Ring small = testing::rational_ring(2, 3);
  EXPECT_EQ(as_text(radical_generators(small).generators()),
            as_text(permanental_ideal(small).generators()));
  for (const auto& [m, n] : std::vector<std::pair<int, int>>{{3, 3}, {3, 4}, {4, 4}}) {
    const Ring ring = testing::rational_ring(m, n);
    const auto triples = squarefree_triples(ring);
    EXPECT_EQ(as_text(triples), oracle_triples(ring));
    EXPECT_EQ(radical_generators(ring).generators().size(),
              permanental_ideal(ring).generators().size() + triples.size());
  }
  EXPECT_EQ(squarefree_triples(testing::rational_ring(3, 3)).size(), 6u);
}

TEST(PermanentalTest, EmbeddedComponentGenerators) {
  const Ring ring = testing::rational_ring(3, 3);
  const Ideal q = embedded_Q(ring);
  EXPECT_EQ(q.generators().size(), 18u);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) EXPECT_TRUE(ideal_member(x(ring, i, j).pow(2), q));
}

TEST(PermanentalTest, UnmixedParts) {
  const Ring ring = testing::rational_ring(3, 3);
  EXPECT_EQ(unmixed_part(ring, 1).generators().size(), 27u);  // 3 row pairs x 9 column pairs
  EXPECT_EQ(unmixed_part(ring, 2).generators().size(), 27u);
  EXPECT_THROW(unmixed_part(ring, 4), RangeError);
  const Ring two = testing::rational_ring(2, 2);
  EXPECT_THROW(unmixed_part(two, 1), RangeError);
  EXPECT_THROW(unmixed_part(two, 2), RangeError);
  EXPECT_TRUE(ideal_equal(unmixed_part(two, 3), permanental_ideal(two)));
  EXPECT_TRUE(ideal_contains(unmixed_part(ring, 3), permanental_ideal(ring)));
}

TEST(PermanentalTest, AntiDiagonalHelpers) {
  const Shape shape(3, 4);
  const Monomial m = anti_diagonal_product(shape, {1, 2, 3}, {2, 3, 4});
  const Ring ring = testing::rational_ring(3, 4);
  EXPECT_EQ(Polynomial::term(ring, m, 1), x(ring, 1, 4) * x(ring, 2, 3) * x(ring, 3, 2));
  EXPECT_TRUE(is_anti_diagonal(m));
  EXPECT_FALSE(is_anti_diagonal((x(ring, 1, 1) * x(ring, 2, 2)).terms().front().monomial));
  EXPECT_FALSE(is_anti_diagonal((x(ring, 1, 2) * x(ring, 2, 2)).terms().front().monomial));
  EXPECT_FALSE(is_anti_diagonal((x(ring, 1, 2).pow(2) * x(ring, 2, 1)).terms().front().monomial));
  EXPECT_TRUE(is_anti_diagonal(x(ring, 2, 3).terms().front().monomial));
  EXPECT_THROW(anti_diagonal_product(shape, {1, 2}, {1}), PatternError);
}

TEST(PermanentalTest, InvariantUnderRowAndColumnPermutations) {
  const Ring ring = testing::rational_ring(3, 4);
  const Ideal p2 = permanental_ideal(ring);
  const Ideal rad = radical_generators(ring);
  std::vector<int> rows{0, 1, 2};
  std::vector<int> cols{0, 1, 2, 3};
  std::mt19937 rng(41);
  for (int k = 0; k < 6; ++k) {
    std::shuffle(rows.begin(), rows.end(), rng);
    std::shuffle(cols.begin(), cols.end(), rng);
    std::vector<Polynomial> moved;
    for (const auto& g : p2.generators()) moved.push_back(testing::permute(g, rows, cols));
    EXPECT_EQ(as_text(moved), as_text(p2.generators()));
    moved.clear();
    for (const auto& g : rad.generators()) moved.push_back(testing::permute(g, rows, cols));
    EXPECT_EQ(as_text(moved), as_text(rad.generators()));
  }
}

}  // namespace
}  // namespace permideal
