#pragma once

#include <array>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "permideal/ideal.hpp"
#include "permideal/polynomial.hpp"

namespace permideal {

/// A minimal prime of the 2×2 permanental ideal.
///   RowComplement: all variables outside one kept row (needs n >= 3)
///   ColComplement: all variables outside one kept column (needs m >= 3)
///   Block:         one 2×2 subpermanent plus every variable outside that block
struct MinimalPrime {
  enum class Kind { RowComplement, ColComplement, Block };

  Kind kind;
  int kept = 0;                  // row or column for the complement kinds
  std::array<int, 2> rows{};     // Block only
  std::array<int, 2> cols{};     // Block only

  /// Matrix variables among the generators.
  std::vector<VarRef> variables(const Shape& shape) const;
  bool contains_variable(int row, int col) const;
  Ideal generators(const Ring& ring) const;
  /// Height read off the generators: number of variables, plus one for the quadric.
  int height(const Shape& shape) const;
  std::string describe() const;
};

std::vector<MinimalPrime> minimal_primes(const Shape& shape);

/// (m−1)n, m(n−1), mn−3.
int height_formula(MinimalPrime::Kind kind, const Shape& shape);

/// A linear form Σ a_ij x[i,j].
struct LinearForm {
  std::map<std::pair<int, int>, Scalar> coeffs;

  static LinearForm all_ones(const Shape& shape);
  Polynomial to_polynomial(const Ring& ring) const;
  bool has_nonzero(int row, int col) const;
};

/// Structural membership of a linear form in a minimal prime.
bool linear_form_in_prime(const LinearForm& form, const MinimalPrime& prime);

/// Rank of the symmetric matrix of a quadratic form (doubled so no halving
/// is needed). Throws UnsupportedField in characteristic 2.
int quadratic_form_rank(const Polynomial& quadric);

/// Raised when the containment hypothesis I_i ⊆ J_j (i ≠ j) fails.
class HypothesisViolation : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Checks ∩(I_i + J_i) = ΣI_i + ∩J_i for pairs satisfying I_i ⊆ J_j
/// whenever i ≠ j. Throws HypothesisViolation when they do not.
bool niermann_check(std::span<const std::pair<Ideal, Ideal>> pairs,
                    const TermOrder& order = TermOrder::diag_lex(),
                    const GbOptions& options = {});

/// The pair list whose intersection identity yields the third unmixed part:
/// (⟨block permanent⟩, ⟨variables outside the block⟩) per 2×2 block.
std::vector<std::pair<Ideal, Ideal>> block_niermann_pairs(const Ring& ring);

}  // namespace permideal
