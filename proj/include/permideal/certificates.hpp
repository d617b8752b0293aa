#pragma once

#include <array>
#include <vector>

#include "permideal/polynomial.hpp"

namespace permideal {

/// A matrix position, one-based.
struct Cell {
  int row;
  int col;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// An explicit expression target = Σ cofactor_k · generator_k where every
/// generator is a 2×2 subpermanent.
struct MembershipCertificate {
  struct Entry {
    Polynomial cofactor;
    std::array<int, 2> rows;
    std::array<int, 2> cols;
    Polynomial generator;
  };

  Polynomial target;
  std::vector<Entry> entries;

  Polynomial expand() const;
  /// Expansion equals the target exactly and every generator is the
  /// subpermanent its indices name.
  bool verify() const;
};

/// Certificate that a product of three entries spread over two rows and three
/// columns (or three rows and two columns) lies in the permanental ideal.
/// The cofactors involve 1/2; throws UnsupportedField in characteristic 2 and
/// PatternError when the cells do not form the pattern.
MembershipCertificate triple_certificate(const Ring& ring, const std::array<Cell, 3>& cells);

/// Certificate for x[c0]^e0 x[c1]^e1 x[c2]^e2 with distinct rows, distinct
/// columns, and positive exponents summing to 4. Throws as above.
MembershipCertificate quartic_certificate(const Ring& ring, const std::array<Cell, 3>& cells,
                                          const std::array<int, 3>& exponents);

/// Every cell triple matching triple_certificate's pattern, in lexicographic order.
std::vector<std::array<Cell, 3>> triple_patterns(const Shape& shape);

struct QuarticPattern {
  std::array<Cell, 3> cells;
  std::array<int, 3> exponents;
};
/// Every distinct-row, distinct-column cell triple with each exponent split.
std::vector<QuarticPattern> quartic_patterns(const Shape& shape);

}  // namespace permideal
