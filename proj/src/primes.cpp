#include "permideal/primes.hpp"

#include <algorithm>

#include "permideal/errors.hpp"
#include "permideal/permanental.hpp"

namespace permideal {

std::vector<VarRef> MinimalPrime::variables(const Shape& shape) const {
  std::vector<VarRef> out;
  for (int i = 1; i <= shape.m; ++i) {
    for (int j = 1; j <= shape.n; ++j) {
      if (contains_variable(i, j)) out.push_back(VarRef::matrix(i, j));
    }
  }
  return out;
}

bool MinimalPrime::contains_variable(int row, int col) const {
  switch (kind) {
    case Kind::RowComplement: return row != kept;
    case Kind::ColComplement: return col != kept;
    case Kind::Block: {
      const bool in_rows = row == rows[0] || row == rows[1];
      const bool in_cols = col == cols[0] || col == cols[1];
      return !(in_rows && in_cols);
    }
  }
  return false;
}

Ideal MinimalPrime::generators(const Ring& ring) const {
  std::vector<Polynomial> gens;
  if (kind == Kind::Block) {
    gens.push_back(permanent(ring, {rows[0], rows[1]}, {cols[0], cols[1]}));
  }
  for (const auto& v : variables(ring.shape)) gens.push_back(Polynomial::variable(ring, v));
  return Ideal(ring, std::move(gens));
}

int MinimalPrime::height(const Shape& shape) const {
  return static_cast<int>(variables(shape).size()) + (kind == Kind::Block ? 1 : 0);
}

std::string MinimalPrime::describe() const {
  switch (kind) {
    case Kind::RowComplement: return "all rows except " + std::to_string(kept);
    case Kind::ColComplement: return "all columns except " + std::to_string(kept);
    case Kind::Block:
      return "block rows {" + std::to_string(rows[0]) + "," + std::to_string(rows[1]) +
             "} cols {" + std::to_string(cols[0]) + "," + std::to_string(cols[1]) + "}";
  }
  return {};
}

std::vector<MinimalPrime> minimal_primes(const Shape& shape) {
  std::vector<MinimalPrime> out;
  if (shape.n >= 3) {
    for (int i = 1; i <= shape.m; ++i) out.push_back({MinimalPrime::Kind::RowComplement, i});
  }
  if (shape.m >= 3) {
    for (int j = 1; j <= shape.n; ++j) out.push_back({MinimalPrime::Kind::ColComplement, j});
  }
  for (int i = 1; i <= shape.m; ++i) {
    for (int k = i + 1; k <= shape.m; ++k) {
      for (int j = 1; j <= shape.n; ++j) {
        for (int l = j + 1; l <= shape.n; ++l) {
          out.push_back({MinimalPrime::Kind::Block, 0, {i, k}, {j, l}});
        }
      }
    }
  }
  return out;
}

int height_formula(MinimalPrime::Kind kind, const Shape& shape) {
  switch (kind) {
    case MinimalPrime::Kind::RowComplement: return (shape.m - 1) * shape.n;
    case MinimalPrime::Kind::ColComplement: return shape.m * (shape.n - 1);
    case MinimalPrime::Kind::Block: return shape.m * shape.n - 3;
  }
  return 0;
}

LinearForm LinearForm::all_ones(const Shape& shape) {
  LinearForm form;
  for (int i = 1; i <= shape.m; ++i) {
    for (int j = 1; j <= shape.n; ++j) form.coeffs[{i, j}] = 1;
  }
  return form;
}

Polynomial LinearForm::to_polynomial(const Ring& ring) const {
  std::vector<Term> terms;
  for (const auto& [pos, c] : coeffs) {
    const Scalar value = ring.field.normalize(c);
    if (value == 0) continue;
    terms.push_back({Monomial::variable(ring.shape, VarRef::matrix(pos.first, pos.second)), value});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

bool LinearForm::has_nonzero(int row, int col) const {
  auto it = coeffs.find({row, col});
  return it != coeffs.end() && it->second != 0;
}

bool linear_form_in_prime(const LinearForm& form, const MinimalPrime& prime) {
  // The degree-one part of every minimal prime is spanned by its variables.
  for (const auto& [pos, c] : form.coeffs) {
    if (c != 0 && !prime.contains_variable(pos.first, pos.second)) return false;
  }
  return true;
}

int quadratic_form_rank(const Polynomial& quadric) {
  const Ring& ring = quadric.ring();
  const FieldSpec& F = ring.field;
  if (!F.two_is_unit()) {
    throw UnsupportedField("quadratic form rank is undefined over " + F.name());
  }
  if (quadric.is_zero()) return 0;
  if (!quadric.is_homogeneous() || quadric.degree() != 2) {
    throw PatternError("expected a homogeneous quadric");
  }

  std::vector<std::size_t> support;
  for (const auto& t : quadric.terms()) {
    for (const auto& v : t.monomial.support()) support.push_back(v.first.index(ring.shape));
  }
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  const std::size_t d = support.size();
  auto slot = [&](std::size_t var) {
    return static_cast<std::size_t>(std::lower_bound(support.begin(), support.end(), var) -
                                    support.begin());
  };

  // Gram matrix of 2q: diagonal 2·c(x²), off-diagonal c(x·y).
  std::vector<std::vector<Scalar>> a(d, std::vector<Scalar>(d, Scalar(0)));
  for (const auto& t : quadric.terms()) {
    const auto vars = t.monomial.support();
    if (vars.size() == 1) {
      const std::size_t i = slot(vars[0].first.index(ring.shape));
      a[i][i] = F.add(a[i][i], F.mul(F.from_int(2), t.coeff));
    } else {
      const std::size_t i = slot(vars[0].first.index(ring.shape));
      const std::size_t j = slot(vars[1].first.index(ring.shape));
      a[i][j] = F.add(a[i][j], t.coeff);
      a[j][i] = F.add(a[j][i], t.coeff);
    }
  }

  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < d && row < d; ++col) {
    std::size_t pivot = row;
    while (pivot < d && a[pivot][col] == 0) ++pivot;
    if (pivot == d) continue;
    std::swap(a[pivot], a[row]);
    const Scalar inv = F.inv(a[row][col]);
    for (std::size_t r = row + 1; r < d; ++r) {
      if (a[r][col] == 0) continue;
      const Scalar factor = F.mul(a[r][col], inv);
      for (std::size_t c = col; c < d; ++c) a[r][c] = F.sub(a[r][c], F.mul(factor, a[row][c]));
    }
    ++row;
    ++rank;
  }
  return rank;
}

bool niermann_check(std::span<const std::pair<Ideal, Ideal>> pairs, const TermOrder& order,
                    const GbOptions& options) {
  if (pairs.empty()) throw PatternError("need at least one pair");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      if (i == j) continue;
      if (!ideal_contains(pairs[j].second, pairs[i].first, order, options)) {
        throw HypothesisViolation("I_" + std::to_string(i + 1) + " is not contained in J_" +
                                  std::to_string(j + 1));
      }
    }
  }
  std::vector<Ideal> sums;
  std::vector<Ideal> firsts;
  std::vector<Ideal> seconds;
  for (const auto& [I, J] : pairs) {
    sums.push_back(ideal_sum(I, J));
    firsts.push_back(I);
    seconds.push_back(J);
  }
  const Ideal lhs = intersect_all(sums, order, options);
  const Ideal rhs = ideal_sum(ideal_sum(firsts), intersect_all(seconds, order, options));
  return ideal_equal(lhs, rhs, order, options);
}

std::vector<std::pair<Ideal, Ideal>> block_niermann_pairs(const Ring& ring) {
  std::vector<std::pair<Ideal, Ideal>> out;
  for (const auto& prime : minimal_primes(ring.shape)) {
    if (prime.kind != MinimalPrime::Kind::Block) continue;
    Ideal I(ring, {permanent(ring, {prime.rows[0], prime.rows[1]},
                             {prime.cols[0], prime.cols[1]})});
    std::vector<Polynomial> vars;
    for (const auto& v : prime.variables(ring.shape)) vars.push_back(Polynomial::variable(ring, v));
    out.emplace_back(std::move(I), Ideal(ring, std::move(vars)));
  }
  return out;
}

}  // namespace permideal
