#include "permideal/ideal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace permideal {

Ideal::Ideal(Ring ring) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {}

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators) {
    require_same_ring(ring_, g.ring());
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
}

bool Ideal::is_monomial() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_monomial(); });
}

bool Ideal::uses_elim() const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.uses_elim(); });
}

std::shared_ptr<const GbReport> Ideal::groebner(const TermOrder& order,
                                                const GbOptions& options) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->bases.find(order);
    if (it != cache_->bases.end()) return it->second;
  }
  auto report = std::make_shared<const GbReport>(buchberger(generators_, order, options));
  std::lock_guard lock(cache_->mutex);
  return cache_->bases.try_emplace(order, std::move(report)).first->second;
}

void Ideal::seed_basis(const TermOrder& order, std::vector<Polynomial> basis) const {
  auto report = std::make_shared<GbReport>();
  report->basis = std::move(basis);
  report->order = order;
  std::lock_guard lock(cache_->mutex);
  cache_->bases.try_emplace(order, std::move(report));
}

bool in_monomial_ideal(const Monomial& m, std::span<const Monomial> leads) {
  return std::any_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
}

bool ideal_member(const Polynomial& f, const Ideal& ideal, const TermOrder& order,
                  const GbOptions& options) {
  require_same_ring(f.ring(), ideal.ring());
  if (f.is_zero()) return true;
  return normal_form(f, ideal.basis(order, options), order).is_zero();
}

namespace {

// Row degrees followed by column degrees; t is ignored.
std::vector<unsigned> bidegree(const Monomial& m, const Shape& shape) {
  std::vector<unsigned> d(static_cast<std::size_t>(shape.m + shape.n), 0);
  for (const auto& [v, e] : m.support()) {
    if (v.is_elim()) continue;
    d[static_cast<std::size_t>(v.row - 1)] += e;
    d[static_cast<std::size_t>(shape.m + v.col - 1)] += e;
  }
  return d;
}

std::vector<unsigned> require_bihomogeneous(const Polynomial& p) {
  const auto d = bidegree(p.terms().front().monomial, p.ring().shape);
  for (const auto& t : p.terms()) {
    if (bidegree(t.monomial, p.ring().shape) != d) {
      throw PatternError("not homogeneous in row and column content: " + p.to_string());
    }
  }
  return d;
}

}  // namespace

bool bigraded_member(const Polynomial& f, const Ideal& ideal, const TermOrder& order,
                     const GbOptions& options) {
  require_same_ring(f.ring(), ideal.ring());
  if (f.is_zero()) return true;
  const auto target = require_bihomogeneous(f);
  for (const auto& g : ideal.generators()) require_bihomogeneous(g);
  const Shape shape = ideal.ring().shape;
  auto keep = [&](const Monomial& m) {
    const auto d = bidegree(m, shape);
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k] > target[k]) return false;
    }
    return true;
  };
  const auto report = truncated_buchberger(ideal.generators(), order, keep, options);
  return normal_form(f, report.basis, order).is_zero();
}

bool ideal_contains(const Ideal& outer, const Ideal& inner, const TermOrder& order,
                    const GbOptions& options) {
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Polynomial& g) { return ideal_member(g, outer, order, options); });
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal ideal_sum(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw RangeError("sum of an empty ideal list");
  std::vector<Polynomial> gens;
  for (const auto& I : ideals) {
    require_same_ring(ideals.front().ring(), I.ring());
    gens.insert(gens.end(), I.generators().begin(), I.generators().end());
  }
  return Ideal(ideals.front().ring(), std::move(gens));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  std::vector<Polynomial> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal eliminate(const Ideal& ideal, const TermOrder& elim_order, const GbOptions& options) {
  if (!elim_order.eliminates()) throw RangeError("eliminate needs an elimination order");
  std::vector<Polynomial> kept;
  for (const auto& g : ideal.basis(elim_order, options)) {
    if (!g.uses_elim()) kept.push_back(g);
  }
  Ideal result(ideal.ring(), kept);
  // The t-free part of a reduced lex basis with t on top is the reduced basis
  // of the elimination ideal for the remaining variables.
  result.seed_basis(elim_order.without_elim(), std::move(kept));
  return result;
}

Ideal monomial_intersection(const Ideal& a, const Ideal& b) {
  require_same_ring(a.ring(), b.ring());
  if (!a.is_monomial() || !b.is_monomial()) throw PatternError("monomial ideals required");
  std::vector<Monomial> lcms;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) {
      lcms.push_back(f.terms().front().monomial.lcm(g.terms().front().monomial));
    }
  }
  // Drop non-minimal generators; ascending degree puts divisors first.
  std::stable_sort(lcms.begin(), lcms.end(),
                   [](const Monomial& x, const Monomial& y) { return x.degree() < y.degree(); });
  std::vector<Monomial> minimal;
  for (const auto& m : lcms) {
    if (!in_monomial_ideal(m, minimal)) minimal.push_back(m);
  }
  std::vector<Polynomial> gens;
  for (const auto& m : minimal) gens.push_back(Polynomial::term(a.ring(), m, 1));
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersection_by_elimination(const Ideal& a, const Ideal& b, const TermOrder& order,
                                  const GbOptions& options) {
  require_same_ring(a.ring(), b.ring());
  if (a.uses_elim() || b.uses_elim()) {
    throw PatternError("intersection inputs must not involve the elimination variable");
  }
  const Ring& ring = a.ring();
  const Polynomial t = Polynomial::variable(ring, VarRef::elim());
  const Polynomial one_minus_t = Polynomial::constant(ring, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a.generators()) gens.push_back(t * f);
  for (const auto& g : b.generators()) gens.push_back(one_minus_t * g);
  return eliminate(Ideal(ring, std::move(gens)), TermOrder::elim_block(order.without_elim()),
                   options);
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b, const TermOrder& order,
                         const GbOptions& options) {
  if (a.is_monomial() && b.is_monomial()) return monomial_intersection(a, b);
  return intersection_by_elimination(a, b, order, options);
}

Ideal intersect_all(std::span<const Ideal> ideals, const TermOrder& order,
                    const GbOptions& options) {
  if (ideals.empty()) throw RangeError("intersection of an empty ideal list");
  std::vector<const Ideal*> sorted;
  for (const auto& I : ideals) sorted.push_back(&I);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Ideal* x, const Ideal* y) {
    return x->generators().size() < y->generators().size();
  });
  Ideal acc = *sorted.front();
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    acc = ideal_intersection(acc, *sorted[k], order, options);
  }
  return acc;
}

bool radical_member(const Polynomial& f, const Ideal& ideal, const TermOrder& order,
                    const GbOptions& options) {
  require_same_ring(f.ring(), ideal.ring());
  if (f.is_zero()) throw EmptyPolynomial("radical membership of the zero polynomial");
  if (f.uses_elim() || ideal.uses_elim()) {
    throw PatternError("radical membership inputs must not involve the elimination variable");
  }
  if (ideal_member(f, ideal, order.without_elim(), options)) return true;
  const Ring& ring = ideal.ring();
  std::vector<Polynomial> gens = ideal.generators();
  gens.push_back(Polynomial::constant(ring, 1) - Polynomial::variable(ring, VarRef::elim()) * f);
  return buchberger(gens, TermOrder::elim_block(order.without_elim()), options).is_unit();
}

bool ideal_equal(const Ideal& a, const Ideal& b, const TermOrder& order, const GbOptions& options) {
  require_same_ring(a.ring(), b.ring());
  return a.basis(order, options) == b.basis(order, options);
}

std::vector<Monomial> gap_monomials(const Ideal& inner, const Ideal& outer, unsigned degree_cap,
                                    const TermOrder& order, const GbOptions& options) {
  require_same_ring(inner.ring(), outer.ring());
  if (!ideal_contains(outer, inner, order, options)) {
    throw PatternError("gap_monomials needs the inner ideal contained in the outer one");
  }
  const auto inner_leads = leading_monomials(inner.basis(order, options), order);
  const auto outer_leads = leading_monomials(outer.basis(order, options), order);
  const Shape shape = inner.ring().shape;

  std::unordered_set<Monomial, MonomialHash> seen;
  std::vector<Monomial> frontier;
  for (const auto& g : outer_leads) {
    if (!in_monomial_ideal(g, inner_leads) && seen.insert(g).second) frontier.push_back(g);
  }
  std::vector<Monomial> gap;
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& u : frontier) {
      if (u.degree() > degree_cap) {
        throw NotFiniteWithinCap("gap monomials survive past degree " +
                                 std::to_string(degree_cap));
      }
      gap.push_back(u);
      for (std::size_t v = 0; v < shape.matrix_vars(); ++v) {
        Monomial w = u * Monomial::variable(shape, VarRef::from_index(shape, v));
        if (!in_monomial_ideal(w, inner_leads) && seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  std::sort(gap.begin(), gap.end(),
            [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  return gap;
}

}  // namespace permideal
