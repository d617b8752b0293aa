#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>
#include <span>
#include <vector>

#include "permideal/groebner.hpp"
#include "permideal/polynomial.hpp"

namespace permideal {

/// An ideal given by generators, with a per-order cache of its canonical
/// reduced Groebner basis.
///
/// Generators are immutable; copies share the cache. Concurrent callers may
/// compute the same basis twice, the first stored result wins and both are
/// identical.
class Ideal {
 public:
  explicit Ideal(Ring ring);
  /// Zero generators are dropped.
  Ideal(Ring ring, std::vector<Polynomial> generators);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const& { return generators_; }
  /// By value on temporaries, so range-for over a returned ideal is safe.
  std::vector<Polynomial> generators() && { return std::move(generators_); }
  bool is_zero() const { return generators_.empty(); }
  /// Every generator is a single term.
  bool is_monomial() const;
  bool uses_elim() const;

  /// Cached canonical reduced Groebner basis. Budget failures are not cached.
  std::shared_ptr<const GbReport> groebner(const TermOrder& order,
                                           const GbOptions& options = {}) const;
  const std::vector<Polynomial>& basis(const TermOrder& order,
                                       const GbOptions& options = {}) const {
    return groebner(order, options)->basis;
  }

  /// Stores a basis known to be the canonical reduced basis for `order`.
  void seed_basis(const TermOrder& order, std::vector<Polynomial> basis) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<TermOrder, std::shared_ptr<const GbReport>> bases;
  };

  Ring ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

bool ideal_member(const Polynomial& f, const Ideal& ideal,
                  const TermOrder& order = TermOrder::diag_lex(), const GbOptions& options = {});

/// True when every generator of `inner` lies in `outer`.
bool ideal_contains(const Ideal& outer, const Ideal& inner,
                    const TermOrder& order = TermOrder::diag_lex(), const GbOptions& options = {});

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_sum(std::span<const Ideal> ideals);
Ideal ideal_product(const Ideal& a, const Ideal& b);

/// I ∩ F[x] for an elimination order. The result's basis for the base order
/// is seeded from the elimination basis.
Ideal eliminate(const Ideal& ideal, const TermOrder& elim_order, const GbOptions& options = {});

/// Intersection of two ideals free of t: pairwise lcm for monomial ideals,
/// otherwise elimination of t from t·I + (1 − t)·J.
Ideal ideal_intersection(const Ideal& a, const Ideal& b,
                         const TermOrder& order = TermOrder::diag_lex(),
                         const GbOptions& options = {});
/// Always takes the elimination route.
Ideal intersection_by_elimination(const Ideal& a, const Ideal& b, const TermOrder& order,
                                  const GbOptions& options = {});
/// Monomial ideals only; throws PatternError otherwise.
Ideal monomial_intersection(const Ideal& a, const Ideal& b);
/// Left fold over pairwise intersections, fewest generators first.
Ideal intersect_all(std::span<const Ideal> ideals, const TermOrder& order = TermOrder::diag_lex(),
                    const GbOptions& options = {});

/// Membership for f and generators homogeneous in both row content and
/// column content. Only the part of a basis below f's row and column degrees
/// is computed, and nothing is cached. Throws PatternError when an input is
/// not bihomogeneous.
bool bigraded_member(const Polynomial& f, const Ideal& ideal,
                     const TermOrder& order = TermOrder::diag_lex(), const GbOptions& options = {});
/// Some power of f lies in I, decided by 1 ∈ I + ⟨1 − t·f⟩.
bool radical_member(const Polynomial& f, const Ideal& ideal,
                    const TermOrder& order = TermOrder::diag_lex(), const GbOptions& options = {});

/// Canonical reduced bases coincide.
bool ideal_equal(const Ideal& a, const Ideal& b, const TermOrder& order = TermOrder::diag_lex(),
                 const GbOptions& options = {});

/// Raised by gap_monomials when the gap does not close by the degree cap.
class NotFiniteWithinCap : public AlgebraError {
 public:
  using AlgebraError::AlgebraError;
};

/// Monomials in in(outer) but not in in(inner), where inner ⊆ outer.
/// Throws PatternError when inner ⊄ outer and NotFiniteWithinCap when a gap
/// monomial of degree above `degree_cap` exists.
std::vector<Monomial> gap_monomials(const Ideal& inner, const Ideal& outer, unsigned degree_cap,
                                    const TermOrder& order = TermOrder::diag_lex(),
                                    const GbOptions& options = {});

/// True when some leading monomial in `leads` divides `m`.
bool in_monomial_ideal(const Monomial& m, std::span<const Monomial> leads);

}  // namespace permideal
