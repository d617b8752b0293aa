#include "permideal/permanental.hpp"

#include "permideal/certificates.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace permideal {
namespace {

/// All increasing k-subsets of {1..n}, lexicographic.
std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int next) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = next; v <= n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

Polynomial monomial_poly(const Ring& ring, const std::vector<std::pair<VarRef, unsigned>>& powers) {
  return Polynomial::term(ring, Monomial::from_powers(ring.shape, powers), 1);
}

ClaimedBasisElement make_element(const Ring& ring, ClaimedBasisElement::Kind kind,
                                 std::vector<int> rows, std::vector<int> cols,
                                 const std::vector<std::pair<VarRef, unsigned>>& powers,
                                 std::array<int, 3> exponents = {1, 1, 1}) {
  return ClaimedBasisElement{kind, std::move(rows), std::move(cols), exponents,
                             monomial_poly(ring, powers)};
}

std::vector<ClaimedBasisElement> claimed_families(const Ring& ring, bool radical) {
  using Kind = ClaimedBasisElement::Kind;
  const int m = ring.shape.m;
  const int n = ring.shape.n;
  auto x = [](int i, int j) { return VarRef::matrix(i, j); };
  std::vector<ClaimedBasisElement> out;

  for (const auto& r : subsets(m, 2)) {
    for (const auto& c : subsets(n, 2)) {
      out.push_back({Kind::Permanent, r, c, {1, 1, 1}, permanent(ring, r, c)});
    }
  }
  // Two rows: hi > lo, three columns j1 < j2 < j3.
  for (const auto& r : subsets(m, 2)) {
    const int lo = r[0];
    const int hi = r[1];
    for (const auto& c : subsets(n, 3)) {
      out.push_back(make_element(ring, Kind::LowerRowPair, {hi, lo}, c,
                                 {{x(hi, c[0]), 1}, {x(hi, c[1]), 1}, {x(lo, c[2]), 1}}));
    }
  }
  for (const auto& r : subsets(m, 2)) {
    const int lo = r[0];
    const int hi = r[1];
    for (const auto& c : subsets(n, 3)) {
      out.push_back(make_element(ring, Kind::UpperRowPair, {hi, lo}, c,
                                 {{x(hi, c[0]), 1}, {x(lo, c[1]), 1}, {x(lo, c[2]), 1}}));
    }
  }
  // Three rows i1 < i2 < i3, two columns right > left.
  for (const auto& r : subsets(m, 3)) {
    for (const auto& c : subsets(n, 2)) {
      const int left = c[0];
      const int right = c[1];
      out.push_back(make_element(ring, Kind::RightColumnPair, r, {right, left},
                                 {{x(r[0], right), 1}, {x(r[1], right), 1}, {x(r[2], left), 1}}));
    }
  }
  for (const auto& r : subsets(m, 3)) {
    for (const auto& c : subsets(n, 2)) {
      const int left = c[0];
      const int right = c[1];
      out.push_back(make_element(ring, Kind::LeftColumnPair, r, {right, left},
                                 {{x(r[0], right), 1}, {x(r[1], left), 1}, {x(r[2], left), 1}}));
    }
  }
  // Anti-diagonals of 3×3 submatrices: rows ascending, columns descending.
  const std::array<std::array<int, 3>, 3> splits{{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}};
  for (const auto& r : subsets(m, 3)) {
    for (const auto& c : subsets(n, 3)) {
      const std::vector<int> cols_desc{c[2], c[1], c[0]};
      if (radical) {
        out.push_back(make_element(
            ring, Kind::AntiDiagonal, r, cols_desc,
            {{x(r[0], c[2]), 1}, {x(r[1], c[1]), 1}, {x(r[2], c[0]), 1}}));
        continue;
      }
      for (const auto& e : splits) {
        out.push_back(make_element(ring, Kind::AntiDiagonal, r, cols_desc,
                                   {{x(r[0], c[2]), static_cast<unsigned>(e[0])},
                                    {x(r[1], c[1]), static_cast<unsigned>(e[1])},
                                    {x(r[2], c[0]), static_cast<unsigned>(e[2])}},
                                   e));
      }
    }
  }
  return out;
}

}  // namespace

Polynomial GenericMatrix::entry(int row, int col) const {
  return Polynomial::entry(ring_, row, col);
}

Polynomial permanent(const Ring& ring, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size() || rows.empty()) {
    throw PatternError("permanent needs a non-empty square selection");
  }
  for (const auto* sel : {&rows, &cols}) {
    std::set<int> distinct(sel->begin(), sel->end());
    if (distinct.size() != sel->size()) throw PatternError("repeated row or column in selection");
  }
  std::vector<std::size_t> perm(cols.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Term> terms;
  do {
    std::vector<std::pair<VarRef, unsigned>> powers;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      powers.emplace_back(VarRef::matrix(rows[k], cols[perm[k]]), 1);
    }
    terms.push_back({Monomial::from_powers(ring.shape, powers), ring.field.from_int(1)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial::from_terms(ring, std::move(terms));
}

Ideal permanental_ideal(const Ring& ring, int r) {
  if (r < 1 || r > std::min(ring.shape.m, ring.shape.n)) {
    throw RangeError("permanent size " + std::to_string(r) + " out of range for " +
                     ring.shape.to_string());
  }
  std::vector<Polynomial> gens;
  for (const auto& rows : subsets(ring.shape.m, r)) {
    for (const auto& cols : subsets(ring.shape.n, r)) gens.push_back(permanent(ring, rows, cols));
  }
  return Ideal(ring, std::move(gens));
}

std::string to_string(ClaimedBasisElement::Kind kind) {
  using Kind = ClaimedBasisElement::Kind;
  switch (kind) {
    case Kind::Permanent: return "permanent";
    case Kind::LowerRowPair: return "lower-row-pair";
    case Kind::UpperRowPair: return "upper-row-pair";
    case Kind::RightColumnPair: return "right-column-pair";
    case Kind::LeftColumnPair: return "left-column-pair";
    case Kind::AntiDiagonal: return "anti-diagonal";
  }
  return "unknown";
}

std::vector<ClaimedBasisElement> claimed_gb(const Ring& ring) {
  return claimed_families(ring, false);
}

std::vector<ClaimedBasisElement> claimed_radical_gb(const Ring& ring) {
  return claimed_families(ring, true);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t gb_count_formula(const Shape& s) {
  const std::uint64_t m = s.m;
  const std::uint64_t n = s.n;
  return binomial(m, 2) * binomial(n, 2) + 2 * binomial(m, 2) * binomial(n, 3) +
         2 * binomial(n, 2) * binomial(m, 3) + 3 * binomial(m, 3) * binomial(n, 3);
}

std::uint64_t radical_gb_count_formula(const Shape& s) {
  return gb_count_formula(s) - 2 * binomial(s.m, 3) * binomial(s.n, 3);
}

std::uint64_t component_count(const Shape& s) {
  const std::uint64_t m = s.m;
  const std::uint64_t n = s.n;
  const std::uint64_t blocks = binomial(m, 2) * binomial(n, 2);
  if (m >= 3 && n >= 3) return m + n + blocks;
  if (m >= 3) return m + blocks;
  if (n >= 3) return n + blocks;
  return 1;
}

std::uint64_t gap_length_formula(const Shape& s) {
  std::uint64_t total = 0;
  for (int i = 3; i <= std::min(s.m, s.n); ++i) total += binomial(s.m, i) * binomial(s.n, i);
  return total;
}

std::vector<Polynomial> squarefree_triples(const Ring& ring) {
  std::vector<Polynomial> out;
  for (const auto& r : subsets(ring.shape.m, 3)) {
    for (const auto& c : subsets(ring.shape.n, 3)) {
      std::vector<int> perm = c;
      do {
        out.push_back(monomial_poly(ring, {{VarRef::matrix(r[0], perm[0]), 1},
                                           {VarRef::matrix(r[1], perm[1]), 1},
                                           {VarRef::matrix(r[2], perm[2]), 1}}));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return out;
}

Ideal radical_generators(const Ring& ring) {
  std::vector<Polynomial> gens = permanental_ideal(ring, 2).generators();
  for (auto& g : squarefree_triples(ring)) gens.push_back(std::move(g));
  return Ideal(ring, std::move(gens));
}

Ideal embedded_Q(const Ring& ring) {
  std::vector<Polynomial> gens = permanental_ideal(ring, 2).generators();
  for (int i = 1; i <= ring.shape.m; ++i) {
    for (int j = 1; j <= ring.shape.n; ++j) {
      gens.push_back(monomial_poly(ring, {{VarRef::matrix(i, j), 2}}));
    }
  }
  return Ideal(ring, std::move(gens));
}

Ideal unmixed_part(const Ring& ring, int which) {
  const int m = ring.shape.m;
  const int n = ring.shape.n;
  std::vector<Cell> cells;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) cells.push_back({i, j});
  }
  std::vector<Polynomial> gens;
  auto add_monomial = [&](std::set<std::vector<Cell>>& seen, std::vector<Cell> factors) {
    std::sort(factors.begin(), factors.end());
    if (!seen.insert(factors).second) return;
    std::vector<std::pair<VarRef, unsigned>> powers;
    for (const auto& c : factors) powers.emplace_back(VarRef::matrix(c.row, c.col), 1);
    gens.push_back(monomial_poly(ring, powers));
  };

  if (which == 1 || which == 2) {
    if (which == 1 && n < 3) throw RangeError("first unmixed part needs n >= 3");
    if (which == 2 && m < 3) throw RangeError("second unmixed part needs m >= 3");
    std::set<std::vector<Cell>> seen;
    for (const auto& a : cells) {
      for (const auto& b : cells) {
        const bool distinct = which == 1 ? a.row != b.row : a.col != b.col;
        if (distinct) add_monomial(seen, {a, b});
      }
    }
    return Ideal(ring, std::move(gens));
  }
  if (which != 3) throw RangeError("unmixed part index must be 1, 2 or 3");

  gens = permanental_ideal(ring, 2).generators();
  std::set<std::vector<Cell>> seen;
  for (const auto& r : subsets(m, 3)) {
    for (int p = 1; p <= n; ++p) {
      for (int q = 1; q <= n; ++q) {
        for (int s = 1; s <= n; ++s) add_monomial(seen, {{r[0], p}, {r[1], q}, {r[2], s}});
      }
    }
  }
  for (const auto& c : subsets(n, 3)) {
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        for (int k = 1; k <= m; ++k) add_monomial(seen, {{i, c[0]}, {j, c[1]}, {k, c[2]}});
      }
    }
  }
  return Ideal(ring, std::move(gens));
}

Monomial anti_diagonal_product(const Shape& shape, const std::vector<int>& rows,
                               const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw PatternError("anti-diagonal needs a square selection");
  std::vector<std::pair<VarRef, unsigned>> powers;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    powers.emplace_back(VarRef::matrix(rows[k], cols[cols.size() - 1 - k]), 1);
  }
  return Monomial::from_powers(shape, powers);
}

bool is_anti_diagonal(const Monomial& monomial) {
  if (!monomial.is_squarefree() || monomial.uses_elim()) return false;
  auto support = monomial.support();  // row-major, so rows ascend
  for (std::size_t k = 1; k < support.size(); ++k) {
    const VarRef& prev = support[k - 1].first;
    const VarRef& cur = support[k].first;
    if (cur.row <= prev.row || cur.col >= prev.col) return false;
  }
  return true;
}

}  // namespace permideal
