#include <gtest/gtest.h>

#include <algorithm>

#include "permideal/errors.hpp"
#include "permideal/permanental.hpp"
#include "test_support.hpp"

namespace permideal {
namespace {

using testing::RandomPolys;

// Variables listed from largest to smallest, straight from the ordering rule
// on entries; t goes first or last.
std::vector<VarRef> ranked_variables(const Shape& s, const TermOrder& order) {
  std::vector<VarRef> vars;
  for (int i = 1; i <= s.m; ++i) {
    for (int j = 1; j <= s.n; ++j) vars.push_back(VarRef::matrix(i, j));
  }
  const bool transpose = order.base() == TermOrder::Base::DiagLexTranspose;
  // a is smaller than b under DiagLex iff b's column is larger, or equal
  // columns and b's row is larger.
  auto smaller = [&](const VarRef& a, const VarRef& b) {
    const int a1 = transpose ? a.row : a.col;
    const int b1 = transpose ? b.row : b.col;
    const int a2 = transpose ? a.col : a.row;
    const int b2 = transpose ? b.col : b.row;
    return b1 > a1 || (b1 == a1 && b2 > a2);
  };
  std::sort(vars.begin(), vars.end(), [&](const VarRef& a, const VarRef& b) { return smaller(b, a); });
  if (order.eliminates()) {
    vars.insert(vars.begin(), VarRef::elim());
  } else {
    vars.push_back(VarRef::elim());
  }
  return vars;
}

int oracle_compare(const Monomial& a, const Monomial& b, const std::vector<VarRef>& ranked) {
  for (const auto& v : ranked) {
    if (a.exponent(v) != b.exponent(v)) return a.exponent(v) > b.exponent(v) ? 1 : -1;
  }
  return 0;
}

const TermOrder kOrders[] = {
    TermOrder::diag_lex(), TermOrder::diag_lex_transpose(),
    TermOrder::elim_block(TermOrder::diag_lex()),
    TermOrder::elim_block(TermOrder::diag_lex_transpose())};

TEST(TermOrderTest, NamesRoundTrip) {
  EXPECT_EQ(TermOrder::parse("diag-lex"), TermOrder::diag_lex());
  EXPECT_EQ(TermOrder::parse("diag-lex-T"), TermOrder::diag_lex_transpose());
  EXPECT_EQ(TermOrder::diag_lex_transpose().name(), "diag-lex-T");
  EXPECT_EQ(TermOrder::elim_block(TermOrder::diag_lex()).name(), "elim(diag-lex)");
  EXPECT_THROW(TermOrder::parse("grevlex"), RangeError);
}

TEST(TermOrderTest, VariableRanking) {
  const Shape s(3, 3);
  auto v = [&](int i, int j) { return Monomial::variable(s, VarRef::matrix(i, j)); };
  const TermOrder d = TermOrder::diag_lex();
  EXPECT_TRUE(d.greater(v(1, 2), v(3, 1)));  // larger column wins
  EXPECT_TRUE(d.greater(v(2, 1), v(1, 1)));  // then larger row
  const TermOrder t = TermOrder::diag_lex_transpose();
  EXPECT_TRUE(t.greater(v(2, 1), v(1, 3)));
  EXPECT_TRUE(t.greater(v(1, 2), v(1, 1)));
  const Monomial elim = Monomial::variable(s, VarRef::elim());
  EXPECT_TRUE(d.greater(v(1, 1), elim));
  EXPECT_TRUE(TermOrder::elim_block(d).greater(elim, v(3, 3) * v(3, 3)));
}

TEST(TermOrderPropertyTest, MatchesLexOracle) {
  RandomPolys gen(testing::rational_ring(3, 4), 3);
  for (const auto& order : kOrders) {
    const auto ranked = ranked_variables(gen.ring().shape, order);
    for (int k = 0; k < 400; ++k) {
      const Monomial a = gen.monomial(4, true);
      const Monomial b = gen.monomial(4, true);
      const int got = order.compare(a, b) < 0 ? -1 : (order.compare(a, b) > 0 ? 1 : 0);
      EXPECT_EQ(got, oracle_compare(a, b, ranked)) << order.name();
    }
  }
}

TEST(TermOrderPropertyTest, TotalMultiplicativeWellOrder) {
  RandomPolys gen(testing::rational_ring(3, 3), 5);
  const Monomial one(gen.ring().shape);
  for (const auto& order : kOrders) {
    for (int k = 0; k < 300; ++k) {
      const Monomial a = gen.monomial(4, true);
      const Monomial b = gen.monomial(4, true);
      const Monomial c = gen.monomial(4, true);
      EXPECT_EQ(order.compare(a, b) == 0, a == b);
      EXPECT_EQ(order.compare(a, b) < 0, order.compare(b, a) > 0);
      if (order.compare(a, b) < 0 && order.compare(b, c) < 0) {
        EXPECT_TRUE(order.compare(a, c) < 0);
      }
      if (order.compare(a, b) < 0) {
        EXPECT_TRUE(order.compare(a * c, b * c) < 0);
      }
      EXPECT_TRUE(order.compare(a, one) >= 0);
      if (a.divides(b)) {
        EXPECT_TRUE(order.compare(a, b) <= 0);
      }
    }
  }
}

TEST(TermOrderTest, SubpermanentsLeadWithMainDiagonal) {
  const Ring ring = testing::rational_ring(4, 4);
  for (const auto& order : {TermOrder::diag_lex(), TermOrder::diag_lex_transpose()}) {
    for (int r = 2; r <= 4; ++r) {
      const Ideal ideal = permanental_ideal(ring, r);
      for (const auto& p : ideal.generators()) {
        const Monomial lead = p.leading_term(order).monomial;
        // The main diagonal of the selection: sorted rows against sorted columns.
        const auto support = lead.support();
        ASSERT_EQ(support.size(), static_cast<std::size_t>(r));
        for (std::size_t k = 1; k < support.size(); ++k) {
          EXPECT_LT(support[k - 1].first.row, support[k].first.row);
          EXPECT_LT(support[k - 1].first.col, support[k].first.col);
        }
      }
    }
  }
}

}  // namespace
}  // namespace permideal
