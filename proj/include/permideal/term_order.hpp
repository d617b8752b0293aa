#pragma once

#include <compare>
#include <string>

#include "permideal/monomial.hpp"

namespace permideal {

/// Lexicographic diagonal term orders on the generic matrix.
///
/// DiagLex ranks x[i,j] < x[k,l] iff l > j, or l = j and k > i; DiagLexTranspose
/// applies the same rule with rows and columns swapped. Under both, the leading
/// term of every square subpermanent is its main-diagonal product. The
/// elimination variant puts t above every matrix variable; otherwise t is the
/// smallest variable.
class TermOrder {
 public:
  enum class Base { DiagLex, DiagLexTranspose };

  constexpr TermOrder() = default;

  static constexpr TermOrder diag_lex() { return TermOrder(Base::DiagLex, false); }
  static constexpr TermOrder diag_lex_transpose() {
    return TermOrder(Base::DiagLexTranspose, false);
  }
  static constexpr TermOrder elim_block(TermOrder base) { return TermOrder(base.base_, true); }

  /// Accepts "diag-lex" and "diag-lex-T".
  static TermOrder parse(const std::string& name);

  Base base() const { return base_; }
  bool eliminates() const { return elim_; }
  TermOrder without_elim() const { return TermOrder(base_, false); }

  /// "diag-lex", "diag-lex-T", or "elim(<base>)".
  std::string name() const;

  /// Throws ShapeMismatch when the monomials belong to different shapes.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend auto operator<=>(const TermOrder&, const TermOrder&) = default;

 private:
  constexpr TermOrder(Base base, bool elim) : base_(base), elim_(elim) {}

  Base base_ = Base::DiagLex;
  bool elim_ = false;
};

inline std::strong_ordering compare_monomials(const TermOrder& order, const Monomial& a,
                                              const Monomial& b) {
  return order.compare(a, b);
}

/// Comparator used for the canonical storage order of polynomial terms
/// (elimination block over DiagLex, descending).
struct StorageGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return TermOrder::elim_block(TermOrder::diag_lex()).greater(a, b);
  }
};

}  // namespace permideal
