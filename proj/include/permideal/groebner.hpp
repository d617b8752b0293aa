#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "permideal/errors.hpp"
#include "permideal/polynomial.hpp"
#include "permideal/term_order.hpp"

namespace permideal {

/// Resource limits for one Groebner basis computation. Unset means unlimited.
struct Budget {
  std::optional<std::chrono::milliseconds> time;
  std::optional<std::size_t> max_pairs;

  static Budget unlimited() { return {}; }
  static Budget millis(long ms) { return {std::chrono::milliseconds(ms), std::nullopt}; }
};

struct GbStats {
  std::size_t s_pairs_processed = 0;
  std::size_t reductions_to_zero = 0;
  std::size_t skipped_coprime = 0;
  std::size_t skipped_chain = 0;
  std::chrono::milliseconds elapsed{0};
};

/// Raised when a computation exhausts its Budget; carries the statistics
/// gathered so far.
class BudgetExceeded : public AlgebraError {
 public:
  BudgetExceeded(const std::string& what, GbStats partial)
      : AlgebraError(what), partial_(partial) {}
  const GbStats& partial() const { return partial_; }

 private:
  GbStats partial_;
};

struct GbOptions {
  Budget budget;
  /// Buchberger's chain criterion; the coprime criterion is always applied.
  bool chain_criterion = true;
};

/// Output of buchberger(): the canonical reduced basis plus statistics.
struct GbReport {
  /// Monic, interreduced, sorted descending by leading monomial.
  std::vector<Polynomial> basis;
  TermOrder order;
  GbStats stats;

  bool is_unit() const { return basis.size() == 1 && basis.front().is_constant(); }
};

/// Full reduction of f by `basis`: no term of the result is divisible by a
/// leading monomial of the basis. Divisors are tried in list order.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const TermOrder& order);

/// (lcm/in f)·f/lc(f) − (lcm/in g)·g/lc(g). Throws EmptyPolynomial on zero input.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order);

/// Buchberger's algorithm with the normal selection strategy. Returns the
/// canonical reduced Groebner basis of the ideal generated by `gens`.
/// Throws BudgetExceeded when the budget runs out.
GbReport buchberger(std::span<const Polynomial> gens, const TermOrder& order,
                    const GbOptions& options = {});

using LcmFilter = std::function<bool(const Monomial&)>;

/// Buchberger restricted to generators and S-pairs whose leading monomial or
/// lcm passes `keep`. When the ideal is homogeneous for a grading and `keep`
/// accepts exactly the degrees below some bound, the result reduces to zero
/// every ideal element of degree within that bound. Not a basis of the whole
/// ideal in general.
GbReport truncated_buchberger(std::span<const Polynomial> gens, const TermOrder& order,
                              const LcmFilter& keep, const GbOptions& options = {});

/// True iff every S-polynomial of the given set reduces to zero modulo it.
bool is_groebner_basis(std::span<const Polynomial> basis, const TermOrder& order);

/// Leading monomials of a basis, in order.
std::vector<Monomial> leading_monomials(std::span<const Polynomial> basis,
                                        const TermOrder& order);

}  // namespace permideal
