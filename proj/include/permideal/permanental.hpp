#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "permideal/ideal.hpp"
#include "permideal/polynomial.hpp"

namespace permideal {

/// The m×n matrix whose (i, j) entry is the variable x[i,j].
class GenericMatrix {
 public:
  explicit GenericMatrix(Ring ring) : ring_(std::move(ring)) {}

  const Ring& ring() const { return ring_; }
  const Shape& shape() const { return ring_.shape; }
  Polynomial entry(int row, int col) const;

 private:
  Ring ring_;
};

/// Permanent of the square submatrix on the given rows and columns
/// (one-based, distinct). Throws PatternError when the selection is not square.
Polynomial permanent(const Ring& ring, const std::vector<int>& rows, const std::vector<int>& cols);

/// Ideal of all r×r subpermanents, row subsets outermost, both in
/// lexicographic order.
Ideal permanental_ideal(const Ring& ring, int r = 2);

/// The explicit reduced Groebner basis of the 2×2 permanental ideal.
///
/// Index conventions (rows i, columns j, one-based):
///   Permanent          x[i,j]x[k,l] + x[k,j]x[i,l], i<k, j<l
///   LowerRowPair       x[i1,j1]x[i1,j2]x[i2,j3],   i1>i2, j1<j2<j3
///   UpperRowPair       x[i1,j1]x[i2,j2]x[i2,j3],   i1>i2, j1<j2<j3
///   RightColumnPair    x[i1,j1]x[i2,j1]x[i3,j2],   i1<i2<i3, j1>j2
///   LeftColumnPair     x[i1,j1]x[i2,j2]x[i3,j2],   i1<i2<i3, j1>j2
///   AntiDiagonal       x[i1,j1]^a x[i2,j2]^b x[i3,j3]^c, i1<i2<i3, j1>j2>j3
/// The anti-diagonal monomials carry one squared entry in the basis of the
/// ideal itself and are squarefree in the basis of its radical.
struct ClaimedBasisElement {
  enum class Kind {
    Permanent,
    LowerRowPair,
    UpperRowPair,
    RightColumnPair,
    LeftColumnPair,
    AntiDiagonal,
  };

  Kind kind;
  std::vector<int> rows;
  std::vector<int> cols;
  std::array<int, 3> exponents{1, 1, 1};
  Polynomial polynomial;
};

std::string to_string(ClaimedBasisElement::Kind kind);

std::vector<ClaimedBasisElement> claimed_gb(const Ring& ring);
/// Same families with squarefree anti-diagonal triples; empty extra family
/// when m or n is 2.
std::vector<ClaimedBasisElement> claimed_radical_gb(const Ring& ring);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// C(m,2)C(n,2) + 2C(m,2)C(n,3) + 2C(n,2)C(m,3) + 3C(m,3)C(n,3).
std::uint64_t gb_count_formula(const Shape& shape);
/// Cardinality of claimed_radical_gb.
std::uint64_t radical_gb_count_formula(const Shape& shape);
/// Number of minimal primes, piecewise in whether m, n exceed 2.
std::uint64_t component_count(const Shape& shape);
/// Σ_{i=3}^{min(m,n)} C(m,i)C(n,i).
std::uint64_t gap_length_formula(const Shape& shape);

/// The permanental ideal plus every squarefree product x[i,p]x[j,q]x[k,r] with
/// distinct rows and distinct columns. Equal to the permanental ideal's
/// generators when m or n is 2.
Ideal radical_generators(const Ring& ring);
/// The squarefree triples added by radical_generators, row triple outermost.
std::vector<Polynomial> squarefree_triples(const Ring& ring);

/// Permanental ideal plus the squares of all variables.
Ideal embedded_Q(const Ring& ring);

/// Explicit generators of the unmixed parts.
///   1: products of two entries from distinct rows (requires n >= 3)
///   2: products of two entries from distinct columns (requires m >= 3)
///   3: permanental ideal + products of three entries from three distinct
///      rows + products of three entries from three distinct columns
/// Throws RangeError for an undefined part.
Ideal unmixed_part(const Ring& ring, int which);

/// x[i1,j1]...x[ik,jk] for the anti-diagonal of the k×k submatrix on rows
/// `rows` and columns `cols` (both increasing).
Monomial anti_diagonal_product(const Shape& shape, const std::vector<int>& rows,
                               const std::vector<int>& cols);
/// True if the monomial is squarefree, its support has distinct rows and
/// distinct columns, and sorting by row gives strictly decreasing columns.
bool is_anti_diagonal(const Monomial& monomial);

}  // namespace permideal
