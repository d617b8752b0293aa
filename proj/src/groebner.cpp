#include "permideal/groebner.hpp"

#include <algorithm>
#include <memory>
#include <set>

namespace permideal {
namespace {

using Clock = std::chrono::steady_clock;
using TermVec = std::vector<Term>;

std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  const std::size_t nv = m.num_vars();
  for (std::size_t i = 0; i < nv; ++i) {
    if (m.exponent(i) != 0) mask |= std::uint64_t{1} << i;
  }
  return mask;
}

/// Leading monomials with their support masks, for divisor lookup.
struct LeadTable {
  std::vector<Monomial> monomials;
  std::vector<std::uint64_t> masks;

  void push_back(const Monomial& m) {
    monomials.push_back(m);
    masks.push_back(support_mask(m));
  }

  long find_divisor(const Monomial& m) const {
    const std::uint64_t mask = support_mask(m);
    for (std::size_t k = 0; k < monomials.size(); ++k) {
      if ((masks[k] & ~mask) == 0 && monomials[k].divides(m)) return static_cast<long>(k);
    }
    return -1;
  }
};

class Engine {
 public:
  Engine(const Ring& ring, const TermOrder& order, const Budget& budget = {})
      : ring_(ring), order_(order), budget_(budget), start_(Clock::now()) {}

  const TermOrder& order() const { return order_; }

  TermVec to_work(const Polynomial& p) const {
    TermVec terms = p.terms();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return order_.greater(a.monomial, b.monomial);
    });
    return terms;
  }

  Polynomial to_poly(TermVec terms) const { return Polynomial::from_terms(ring_, std::move(terms)); }

  void make_monic(TermVec& h) const {
    if (h.empty() || h.front().coeff == 1) return;
    const Scalar inv = ring_.field.inv(h.front().coeff);
    for (auto& t : h) t.coeff = ring_.field.mul(t.coeff, inv);
  }

  /// h[from..] − c·q·g[1..]; both inputs sorted descending, result likewise.
  TermVec sub_scaled_tail(const TermVec& h, std::size_t from, const Scalar& c, const Monomial& q,
                          const TermVec& g) const {
    const FieldSpec& field = ring_.field;
    TermVec out;
    out.reserve(h.size() - from + g.size());
    std::size_t i = from;
    std::size_t j = 1;
    Monomial gm = j < g.size() ? g[j].monomial * q : q;
    while (i < h.size() || j < g.size()) {
      std::strong_ordering cmp = std::strong_ordering::equal;
      if (i == h.size()) {
        cmp = std::strong_ordering::less;
      } else if (j == g.size()) {
        cmp = std::strong_ordering::greater;
      } else {
        cmp = order_.compare(h[i].monomial, gm);
      }
      if (cmp > 0) {
        out.push_back(h[i++]);
        continue;
      }
      Scalar prod = field.mul(c, g[j].coeff);
      if (cmp < 0) {
        out.push_back({gm, field.neg(prod)});
      } else {
        Scalar s = field.sub(h[i].coeff, prod);
        if (s != 0) out.push_back({gm, std::move(s)});
        ++i;
      }
      ++j;
      if (j < g.size()) gm = g[j].monomial * q;
    }
    return out;
  }

  /// Full reduction: every surviving term is irreducible by `leads`.
  TermVec reduce(TermVec h, const std::vector<const TermVec*>& basis, const LeadTable& leads) {
    TermVec result;
    std::size_t pos = 0;
    while (pos < h.size()) {
      if ((++steps_ & 0x3ff) == 0) check_time();
      const long k = leads.find_divisor(h[pos].monomial);
      if (k < 0) {
        result.push_back(std::move(h[pos]));
        ++pos;
        continue;
      }
      const TermVec& g = *basis[static_cast<std::size_t>(k)];
      const Scalar c = ring_.field.div(h[pos].coeff, g.front().coeff);
      const Monomial q = h[pos].monomial / g.front().monomial;
      h = sub_scaled_tail(h, pos + 1, c, q, g);
      pos = 0;
    }
    return result;
  }

  /// S-polynomial of two nonzero sorted polynomials, normalized by leading coefficients.
  TermVec spoly(const TermVec& f, const TermVec& g) const {
    const Monomial l = f.front().monomial.lcm(g.front().monomial);
    const FieldSpec& field = ring_.field;
    const Monomial qf = l / f.front().monomial;
    const Monomial qg = l / g.front().monomial;
    const Scalar cf = field.inv(f.front().coeff);
    const Scalar cg = field.inv(g.front().coeff);
    // (qf·f)/lc(f) − (qg·g)/lc(g), leading terms cancel.
    TermVec scaled_f;
    scaled_f.reserve(f.size());
    scaled_f.push_back({l, field.from_int(1)});
    for (std::size_t i = 1; i < f.size(); ++i) {
      scaled_f.push_back({f[i].monomial * qf, field.mul(f[i].coeff, cf)});
    }
    return sub_scaled_tail(scaled_f, 1, cg, qg, g);
  }

  void check_time() const {
    if (budget_.time && Clock::now() - start_ > *budget_.time) {
      throw BudgetExceeded("Groebner basis time budget of " +
                               std::to_string(budget_.time->count()) + " ms exceeded",
                           stats_with_elapsed());
    }
  }

  GbStats& stats() { return stats_; }
  GbStats stats_with_elapsed() const {
    GbStats s = stats_;
    s.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
    return s;
  }
  const Budget& budget() const { return budget_; }

 private:
  const Ring& ring_;
  TermOrder order_;
  Budget budget_;
  Clock::time_point start_;
  GbStats stats_;
  std::size_t steps_ = 0;
};

struct PairKey {
  unsigned degree;
  Monomial lcm;
  std::size_t i;
  std::size_t j;
};

const Ring& common_ring(std::span<const Polynomial> polys) {
  for (const auto& p : polys) require_same_ring(polys.front().ring(), p.ring());
  return polys.front().ring();
}

}  // namespace

std::vector<Monomial> leading_monomials(std::span<const Polynomial> basis, const TermOrder& order) {
  std::vector<Monomial> out;
  out.reserve(basis.size());
  for (const auto& g : basis) out.push_back(g.leading_term(order).monomial);
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> basis,
                       const TermOrder& order) {
  Engine engine(f.ring(), order);
  std::vector<TermVec> work;
  std::vector<const TermVec*> ptrs;
  LeadTable leads;
  work.reserve(basis.size());
  for (const auto& g : basis) {
    require_same_ring(f.ring(), g.ring());
    if (g.is_zero()) throw EmptyPolynomial("zero polynomial in reduction basis");
    work.push_back(engine.to_work(g));
  }
  for (const auto& w : work) {
    ptrs.push_back(&w);
    leads.push_back(w.front().monomial);
  }
  return engine.to_poly(engine.reduce(engine.to_work(f), ptrs, leads));
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const TermOrder& order) {
  require_same_ring(f.ring(), g.ring());
  if (f.is_zero() || g.is_zero()) throw EmptyPolynomial("S-polynomial of the zero polynomial");
  Engine engine(f.ring(), order);
  return engine.to_poly(engine.spoly(engine.to_work(f), engine.to_work(g)));
}

namespace {

GbReport run_buchberger(std::span<const Polynomial> gens, const TermOrder& order,
                        const GbOptions& options, const LcmFilter& keep) {
  GbReport report;
  report.order = order;
  std::vector<Polynomial> nonzero;
  for (const auto& g : gens) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) return report;
  const Ring& ring = common_ring(nonzero);

  Engine engine(ring, order, options.budget);
  // Stable addresses: basis elements are never moved once inserted.
  std::vector<std::unique_ptr<TermVec>> basis;
  std::vector<const TermVec*> ptrs;
  LeadTable leads;
  std::vector<std::vector<char>> pending;  // pending[j][i], i < j

  auto key_less = [&](const PairKey& a, const PairKey& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    const auto c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  };
  std::set<PairKey, decltype(key_less)> queue(key_less);

  auto insert = [&](TermVec h) {
    engine.make_monic(h);
    const std::size_t idx = basis.size();
    basis.push_back(std::make_unique<TermVec>(std::move(h)));
    ptrs.push_back(basis.back().get());
    const Monomial& lead = basis.back()->front().monomial;
    leads.push_back(lead);
    pending.emplace_back(idx, 1);
    for (std::size_t i = 0; i < idx; ++i) {
      const Monomial l = leads.monomials[i].lcm(lead);
      if (keep && !keep(l)) {
        pending[idx][i] = 0;
        continue;
      }
      queue.insert(PairKey{l.degree(), l, i, idx});
    }
  };
  auto is_pending = [&](std::size_t a, std::size_t b) {
    return a < b ? pending[b][a] != 0 : pending[a][b] != 0;
  };

  for (const auto& g : nonzero) {
    if (keep && !keep(g.leading_term(order).monomial)) continue;
    TermVec h = engine.reduce(engine.to_work(g), ptrs, leads);
    if (!h.empty()) insert(std::move(h));
  }

  while (!queue.empty()) {
    engine.check_time();
    if (options.budget.max_pairs &&
        engine.stats().s_pairs_processed >= *options.budget.max_pairs) {
      throw BudgetExceeded("Groebner basis pair budget exceeded", engine.stats_with_elapsed());
    }
    const PairKey pair = *queue.begin();
    queue.erase(queue.begin());
    pending[pair.j][pair.i] = 0;

    const Monomial& li = leads.monomials[pair.i];
    const Monomial& lj = leads.monomials[pair.j];
    if (li.coprime(lj)) {
      ++engine.stats().skipped_coprime;
      continue;
    }
    if (options.chain_criterion) {
      bool chained = false;
      for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
        if (k == pair.i || k == pair.j) continue;
        chained = leads.monomials[k].divides(pair.lcm) && !is_pending(pair.i, k) &&
                  !is_pending(pair.j, k);
      }
      if (chained) {
        ++engine.stats().skipped_chain;
        continue;
      }
    }

    ++engine.stats().s_pairs_processed;
    TermVec h = engine.reduce(engine.spoly(*basis[pair.i], *basis[pair.j]), ptrs, leads);
    if (h.empty()) {
      ++engine.stats().reductions_to_zero;
    } else {
      insert(std::move(h));
    }
  }

  // Minimalize: ascending by lead, keep elements no kept lead divides.
  std::vector<std::size_t> idx(basis.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return order.compare(leads.monomials[a], leads.monomials[b]) < 0;
  });
  std::vector<const TermVec*> kept;
  LeadTable kept_leads;
  for (std::size_t i : idx) {
    if (kept_leads.find_divisor(leads.monomials[i]) >= 0) continue;
    kept.push_back(basis[i].get());
    kept_leads.push_back(leads.monomials[i]);
  }

  // Tail-reduce each kept element against all kept elements.
  std::vector<TermVec> reduced;
  reduced.reserve(kept.size());
  for (const TermVec* g : kept) {
    TermVec tail(g->begin() + 1, g->end());
    TermVec r = engine.reduce(std::move(tail), kept, kept_leads);
    TermVec full;
    full.reserve(r.size() + 1);
    full.push_back(g->front());
    for (auto& t : r) full.push_back(std::move(t));
    engine.make_monic(full);
    reduced.push_back(std::move(full));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const TermVec& a, const TermVec& b) {
    return order.greater(a.front().monomial, b.front().monomial);
  });
  for (auto& r : reduced) report.basis.push_back(engine.to_poly(std::move(r)));
  report.stats = engine.stats_with_elapsed();
  return report;
}

}  // namespace

GbReport buchberger(std::span<const Polynomial> gens, const TermOrder& order,
                    const GbOptions& options) {
  return run_buchberger(gens, order, options, {});
}

GbReport truncated_buchberger(std::span<const Polynomial> gens, const TermOrder& order,
                              const LcmFilter& keep, const GbOptions& options) {
  return run_buchberger(gens, order, options, keep);
}

bool is_groebner_basis(std::span<const Polynomial> basis, const TermOrder& order) {
  std::vector<Polynomial> nonzero;
  for (const auto& g : basis) {
    if (!g.is_zero()) nonzero.push_back(g);
  }
  if (nonzero.empty()) return true;
  const Ring& ring = common_ring(nonzero);
  Engine engine(ring, order);
  std::vector<TermVec> work;
  work.reserve(nonzero.size());
  for (const auto& g : nonzero) work.push_back(engine.to_work(g));
  std::vector<const TermVec*> ptrs;
  LeadTable leads;
  for (const auto& w : work) {
    ptrs.push_back(&w);
    leads.push_back(w.front().monomial);
  }
  for (std::size_t j = 0; j < work.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!engine.reduce(engine.spoly(work[i], work[j]), ptrs, leads).empty()) return false;
    }
  }
  return true;
}

}  // namespace permideal
