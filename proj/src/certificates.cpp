#include "permideal/certificates.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "permideal/errors.hpp"
#include "permideal/permanental.hpp"

namespace permideal {
namespace {

void check_cells(const Shape& shape, const std::array<Cell, 3>& cells) {
  for (const auto& c : cells) {
    if (c.row < 1 || c.row > shape.m || c.col < 1 || c.col > shape.n) {
      throw RangeError("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) +
                       ") outside " + shape.to_string());
    }
  }
  std::set<Cell> distinct(cells.begin(), cells.end());
  if (distinct.size() != 3) throw PatternError("cells must be distinct");
}

void require_two_invertible(const Ring& ring) {
  if (!ring.field.two_is_unit()) {
    throw UnsupportedField("membership certificates divide by 2; unavailable over " +
                           ring.field.name());
  }
}

Polynomial product(const Ring& ring, std::initializer_list<Cell> cells) {
  Polynomial p = Polynomial::constant(ring, 1);
  for (const auto& c : cells) p = p * Polynomial::entry(ring, c.row, c.col);
  return p;
}

MembershipCertificate::Entry make_entry(const Ring& ring, Polynomial cofactor, int row_a,
                                        int row_b, int col_a, int col_b) {
  std::array<int, 2> rows{std::min(row_a, row_b), std::max(row_a, row_b)};
  std::array<int, 2> cols{std::min(col_a, col_b), std::max(col_a, col_b)};
  Polynomial gen = permanent(ring, {rows[0], rows[1]}, {cols[0], cols[1]});
  return {std::move(cofactor), rows, cols, std::move(gen)};
}

}  // namespace

Polynomial MembershipCertificate::expand() const {
  Polynomial sum(target.ring());
  for (const auto& e : entries) sum += e.cofactor * e.generator;
  return sum;
}

bool MembershipCertificate::verify() const {
  for (const auto& e : entries) {
    const Polynomial expected =
        permanent(target.ring(), {e.rows[0], e.rows[1]}, {e.cols[0], e.cols[1]});
    if (!(e.generator == expected)) return false;
  }
  return expand() == target;
}

MembershipCertificate triple_certificate(const Ring& ring, const std::array<Cell, 3>& cells) {
  check_cells(ring.shape, cells);
  require_two_invertible(ring);

  std::set<int> rows;
  std::set<int> cols;
  for (const auto& c : cells) {
    rows.insert(c.row);
    cols.insert(c.col);
  }
  // Work in (line, position) coordinates: lines are rows for the two-row
  // pattern and columns for the transposed one.
  bool transposed = false;
  if (rows.size() == 2 && cols.size() == 3) {
    transposed = false;
  } else if (rows.size() == 3 && cols.size() == 2) {
    transposed = true;
  } else {
    throw PatternError("need three entries on two rows and three columns, or the transpose");
  }
  auto line_of = [&](const Cell& c) { return transposed ? c.col : c.row; };
  auto pos_of = [&](const Cell& c) { return transposed ? c.row : c.col; };
  auto at = [&](int line, int pos) { return transposed ? Cell{pos, line} : Cell{line, pos}; };

  // The double line holds two cells (positions p < q); the single line one cell at u.
  int double_line = 0;
  int single_line = 0;
  std::vector<int> double_pos;
  int u = 0;
  for (const auto& c : cells) {
    const int count = static_cast<int>(std::count_if(
        cells.begin(), cells.end(), [&](const Cell& d) { return line_of(d) == line_of(c); }));
    if (count == 2) {
      double_line = line_of(c);
      double_pos.push_back(pos_of(c));
    } else {
      single_line = line_of(c);
      u = pos_of(c);
    }
  }
  std::sort(double_pos.begin(), double_pos.end());
  const int p = double_pos[0];
  const int q = double_pos[1];

  const Cell a = at(double_line, u);
  const Cell b = at(double_line, p);
  const Cell c = at(double_line, q);
  const Cell x = at(single_line, u);

  const FieldSpec& F = ring.field;
  const Scalar half = F.inv(F.from_int(2));
  auto entry_for = [&](Polynomial cofactor, int pos_a, int pos_b) {
    const Cell c1 = at(double_line, pos_a);
    const Cell c2 = at(single_line, pos_b);
    return make_entry(ring, std::move(cofactor), c1.row, c2.row, c1.col, c2.col);
  };

  MembershipCertificate cert{product(ring, {b, c, x}), {}};
  // b·c·x = (c/2)·perm(u,p) − (a/2)·perm(p,q) + (b/2)·perm(u,q)
  cert.entries.push_back(entry_for(product(ring, {c}).scale(half), u, p));
  cert.entries.push_back(entry_for(product(ring, {a}).scale(F.neg(half)), p, q));
  cert.entries.push_back(entry_for(product(ring, {b}).scale(half), u, q));
  return cert;
}

MembershipCertificate quartic_certificate(const Ring& ring, const std::array<Cell, 3>& cells,
                                          const std::array<int, 3>& exponents) {
  check_cells(ring.shape, cells);
  std::set<int> rows;
  std::set<int> cols;
  for (const auto& c : cells) {
    rows.insert(c.row);
    cols.insert(c.col);
  }
  if (rows.size() != 3 || cols.size() != 3) {
    throw PatternError("need three entries on distinct rows and distinct columns");
  }
  if (std::any_of(exponents.begin(), exponents.end(), [](int e) { return e < 1; }) ||
      exponents[0] + exponents[1] + exponents[2] != 4) {
    throw PatternError("exponents must be positive and sum to 4");
  }
  require_two_invertible(ring);

  const auto squared = static_cast<std::size_t>(
      std::find(exponents.begin(), exponents.end(), 2) - exponents.begin());
  std::vector<Cell> others;
  for (std::size_t k = 0; k < 3; ++k) {
    if (k != squared) others.push_back(cells[k]);
  }
  const Cell a = others[0];
  const Cell y = others[1];
  const Cell w = cells[squared];
  const Cell v{w.row, y.col};
  const Cell z{y.row, w.col};

  // a·y·w² = a·w·(y·w + v·z) − z·(a·v·w)
  MembershipCertificate cert{product(ring, {a, y, w, w}), {}};
  cert.entries.push_back(make_entry(ring, product(ring, {a, w}), y.row, w.row, y.col, w.col));
  const Polynomial minus_z = -product(ring, {z});
  for (auto& e : triple_certificate(ring, {v, w, a}).entries) {
    e.cofactor = e.cofactor * minus_z;
    cert.entries.push_back(std::move(e));
  }
  return cert;
}

std::vector<std::array<Cell, 3>> triple_patterns(const Shape& shape) {
  std::vector<Cell> all;
  for (int i = 1; i <= shape.m; ++i) {
    for (int j = 1; j <= shape.n; ++j) all.push_back({i, j});
  }
  std::vector<std::array<Cell, 3>> out;
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a + 1; b < all.size(); ++b) {
      for (std::size_t c = b + 1; c < all.size(); ++c) {
        std::set<int> rows{all[a].row, all[b].row, all[c].row};
        std::set<int> cols{all[a].col, all[b].col, all[c].col};
        if ((rows.size() == 2 && cols.size() == 3) || (rows.size() == 3 && cols.size() == 2)) {
          out.push_back({all[a], all[b], all[c]});
        }
      }
    }
  }
  return out;
}

std::vector<QuarticPattern> quartic_patterns(const Shape& shape) {
  std::vector<QuarticPattern> out;
  const std::array<std::array<int, 3>, 3> splits{{{2, 1, 1}, {1, 2, 1}, {1, 1, 2}}};
  for (int r0 = 1; r0 <= shape.m; ++r0) {
    for (int r1 = r0 + 1; r1 <= shape.m; ++r1) {
      for (int r2 = r1 + 1; r2 <= shape.m; ++r2) {
        for (int c0 = 1; c0 <= shape.n; ++c0) {
          for (int c1 = 1; c1 <= shape.n; ++c1) {
            for (int c2 = 1; c2 <= shape.n; ++c2) {
              if (c0 == c1 || c1 == c2 || c0 == c2) continue;
              for (const auto& e : splits) {
                out.push_back({{Cell{r0, c0}, Cell{r1, c1}, Cell{r2, c2}}, e});
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace permideal
