#include "permideal/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "permideal/certificates.hpp"
#include "permideal/errors.hpp"
#include "permideal/ideal.hpp"
#include "permideal/permanental.hpp"
#include "permideal/primes.hpp"

#ifndef PERMIDEAL_VERSION
#define PERMIDEAL_VERSION "0.0.0"
#endif

namespace permideal {
namespace {

using Clock = std::chrono::steady_clock;

class Facts {
 public:
  void add(const std::string& key, const std::string& expected, const std::string& actual) {
    expected_.push_back(key + "=" + expected);
    actual_.push_back(key + "=" + actual);
  }
  void add(const std::string& key, bool expected, bool actual) {
    add(key, std::string(expected ? "true" : "false"), std::string(actual ? "true" : "false"));
  }
  void add(const std::string& key, std::uint64_t expected, std::uint64_t actual) {
    add(key, std::to_string(expected), std::to_string(actual));
  }
  void note(const std::string& line) { notes_.push_back(line); }

  CheckResult finish(const std::string& id) const {
    CheckResult r;
    r.id = id;
    r.expected = join(expected_);
    r.actual = join(actual_);
    r.status = r.expected == r.actual ? CheckStatus::Pass : CheckStatus::Fail;
    r.detail = join(notes_);
    return r;
  }

 private:
  static std::string join(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) {
      if (!out.empty()) out += '\n';
      out += l;
    }
    return out;
  }

  std::vector<std::string> expected_;
  std::vector<std::string> actual_;
  std::vector<std::string> notes_;
};

CheckResult skipped(const std::string& id, const std::string& reason) {
  CheckResult r;
  r.id = id;
  r.status = CheckStatus::Skipped;
  r.detail = reason;
  return r;
}

std::string monomial_text(const Ring& ring, const Monomial& m) {
  return Polynomial::term(ring, m, 1).to_string();
}

std::string basis_text(const std::vector<Polynomial>& basis, const TermOrder& order) {
  std::string out;
  for (const auto& g : basis) {
    if (!out.empty()) out += "; ";
    out += g.to_string(order);
  }
  return out;
}

std::vector<Polynomial> canonical(std::vector<Polynomial> polys, const TermOrder& order) {
  for (auto& p : polys) p = p.monic(order);
  std::sort(polys.begin(), polys.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.greater(a.leading_term(order).monomial, b.leading_term(order).monomial);
  });
  return polys;
}

std::vector<Polynomial> claimed_polynomials(const std::vector<ClaimedBasisElement>& elements) {
  std::vector<Polynomial> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.polynomial);
  return out;
}

// Lists elements present on one side only; notes when only tails differ.
std::string basis_difference(const std::vector<Polynomial>& expected,
                             const std::vector<Polynomial>& actual, const TermOrder& order) {
  std::vector<std::string> missing;
  std::vector<std::string> extra;
  for (const auto& e : expected) {
    if (std::find(actual.begin(), actual.end(), e) == actual.end()) {
      missing.push_back(e.to_string(order));
    }
  }
  for (const auto& a : actual) {
    if (std::find(expected.begin(), expected.end(), a) == expected.end()) {
      extra.push_back(a.to_string(order));
    }
  }
  std::string out = order.name() + " missing {";
  for (std::size_t k = 0; k < missing.size(); ++k) out += (k ? "; " : "") + missing[k];
  out += "} unexpected {";
  for (std::size_t k = 0; k < extra.size(); ++k) out += (k ? "; " : "") + extra[k];
  out += "}";
  if (leading_monomials(expected, order) == leading_monomials(actual, order)) {
    out += " (leading monomials agree; tails differ)";
  }
  return out;
}

bool small_shape(const Shape& s) { return s.m <= 3 && s.n <= 3; }

std::string large_reason(const Shape& s) {
  return "intersection checks at " + s.to_string() + " need --allow-large";
}

Ring ring_of(const SuiteOptions& o) { return Ring(o.shape, o.field); }

std::string char2_reason(const SuiteOptions& o) {
  return "requires 2 to be invertible; field is " + o.field.name();
}

Ideal family_intersection(const Ring& ring, MinimalPrime::Kind kind, const TermOrder& order,
                          const GbOptions& gb) {
  std::vector<Ideal> primes;
  for (const auto& p : minimal_primes(ring.shape)) {
    if (p.kind == kind) primes.push_back(p.generators(ring));
  }
  return intersect_all(primes, order, gb);
}

Polynomial monomial_poly(const Ring& ring, std::initializer_list<std::pair<int, int>> cells) {
  Polynomial p = Polynomial::constant(ring, 1);
  for (const auto& [i, j] : cells) p = p * Polynomial::entry(ring, i, j);
  return p;
}

MembershipCertificate certificate_for(const Ring& ring, const Monomial& m) {
  std::vector<Cell> cells;
  std::vector<int> exps;
  for (const auto& [v, e] : m.support()) {
    cells.push_back({v.row, v.col});
    exps.push_back(static_cast<int>(e));
  }
  if (cells.size() != 3) throw PatternError("expected three distinct entries");
  const std::array<Cell, 3> c{cells[0], cells[1], cells[2]};
  if (m.degree() == 3) return triple_certificate(ring, c);
  return quartic_certificate(ring, c, {exps[0], exps[1], exps[2]});
}

}  // namespace

std::string to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
    case CheckStatus::Timeout: return "timeout";
  }
  return "unknown";
}

bool Report::any_failed() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

bool Report::any_timeout() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.status == CheckStatus::Timeout; });
}

const char* tool_version() { return PERMIDEAL_VERSION; }

CheckResult check_certificates(const SuiteOptions& o) {
  const std::string id = "certificates";
  if (!o.field.two_is_unit()) return skipped(id, char2_reason(o));
  const Ring ring = ring_of(o);
  Facts facts;

  const auto triples = triple_patterns(o.shape);
  std::uint64_t ok = 0;
  for (const auto& cells : triples) ok += triple_certificate(ring, cells).verify() ? 1 : 0;
  facts.add("triple patterns verified", std::uint64_t{triples.size()}, ok);

  const auto quartics = quartic_patterns(o.shape);
  ok = 0;
  for (const auto& q : quartics) {
    ok += quartic_certificate(ring, q.cells, q.exponents).verify() ? 1 : 0;
  }
  facts.add("quartic patterns verified", std::uint64_t{quartics.size()}, ok);

  std::uint64_t monomial_elements = 0;
  ok = 0;
  for (const auto& e : claimed_gb(ring)) {
    if (e.kind == ClaimedBasisElement::Kind::Permanent) continue;
    ++monomial_elements;
    const auto cert = certificate_for(ring, e.polynomial.terms().front().monomial);
    ok += (cert.verify() && cert.target == e.polynomial) ? 1 : 0;
  }
  facts.add("claimed monomial elements certified", monomial_elements, ok);

  if (!triples.empty()) {
    bool refused = false;
    try {
      triple_certificate(Ring(o.shape, FieldSpec::prime_field(2)), triples.front());
    } catch (const UnsupportedField&) {
      refused = true;
    }
    facts.add("refused over Fp:2", true, refused);
  }
  return facts.finish(id);
}

CheckResult check_char2_contrast(const SuiteOptions& o) {
  const std::string id = "char2.contrast";
  if (o.shape.m < 3 || o.shape.n < 3) return skipped(id, "needs at least three rows and columns");
  Facts facts;
  const Ring f2(o.shape, FieldSpec::prime_field(2));
  const Ideal p2_f2 = permanental_ideal(f2);
  facts.add("subpermanents form a basis over Fp:2", true,
            is_groebner_basis(p2_f2.generators(), o.order));
  const Polynomial diag_f2 = monomial_poly(f2, {{1, 1}, {2, 2}, {3, 3}});
  facts.add("x[1,1]*x[2,2]*x[3,3] in ideal over Fp:2", false,
            ideal_member(diag_f2, p2_f2, o.order, o.gb));

  if (o.field.two_is_unit()) {
    const Ring ring = ring_of(o);
    const Ideal p2 = permanental_ideal(ring);
    const Polynomial diag = monomial_poly(ring, {{1, 1}, {2, 2}, {3, 3}});
    const std::string f = o.field.name();
    facts.add("subpermanents form a basis over " + f, false,
              is_groebner_basis(p2.generators(), o.order));
    facts.add("x[1,1]*x[2,2]*x[3,3] in ideal over " + f, false,
              ideal_member(diag, p2, o.order, o.gb));
    facts.add("x[1,1]*x[2,2]*x[3,3] in radical over " + f, true,
              radical_member(diag, p2, o.order, o.gb));
  }
  return facts.finish(id);
}

CheckResult check_primary_decomposition(const SuiteOptions& o) {
  const std::string id = "decomposition.primary";
  if (!o.field.two_is_unit()) return skipped(id, char2_reason(o));
  if (o.shape.m < 3 || o.shape.n < 3) return skipped(id, "needs at least three rows and columns");
  if (!small_shape(o.shape) && !o.allow_large) return skipped(id, large_reason(o.shape));
  const Ring ring = ring_of(o);
  const Ideal p2 = permanental_ideal(ring);
  Facts facts;

  const std::vector<std::string> names{"Q", "I1", "I2", "I3"};
  const std::vector<Ideal> pieces{embedded_Q(ring), unmixed_part(ring, 1), unmixed_part(ring, 2),
                                  unmixed_part(ring, 3)};
  facts.add("intersection of all pieces equals P2", true,
            ideal_equal(intersect_all(pieces, o.order, o.gb), p2, o.order, o.gb));
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    std::vector<Ideal> rest;
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      if (j != k) rest.push_back(pieces[j]);
    }
    const Ideal partial = intersect_all(rest, o.order, o.gb);
    facts.add("without " + names[k] + " equals P2", false, ideal_equal(partial, p2, o.order, o.gb));
    if (k == 0) {
      const Polynomial triple = squarefree_triples(ring).front();
      facts.add("without Q contains " + triple.to_string(), true,
                ideal_member(triple, partial, o.order, o.gb));
      facts.add(triple.to_string() + " in P2", false, ideal_member(triple, p2, o.order, o.gb));
    }
  }

  std::uint64_t maximal = 0;
  for (int i = 1; i <= o.shape.m; ++i) {
    for (int j = 1; j <= o.shape.n; ++j) {
      maximal += radical_member(Polynomial::entry(ring, i, j), pieces[0], o.order, o.gb) ? 1 : 0;
    }
  }
  facts.add("variables in the radical of Q", std::uint64_t{o.shape.matrix_vars()}, maximal);

  // A prime is its own component once every generator times some product of
  // at most two variables outside the prime lies in P2.
  const auto primes = minimal_primes(o.shape);
  std::uint64_t own = 0;
  for (const auto& prime : primes) {
    std::vector<Polynomial> outside{Polynomial::constant(ring, 1)};
    std::vector<Polynomial> singles;
    for (int i = 1; i <= o.shape.m; ++i) {
      for (int j = 1; j <= o.shape.n; ++j) {
        if (!prime.contains_variable(i, j)) singles.push_back(Polynomial::entry(ring, i, j));
      }
    }
    for (std::size_t a = 0; a < singles.size(); ++a) {
      outside.push_back(singles[a]);
      for (std::size_t b = a; b < singles.size(); ++b) outside.push_back(singles[a] * singles[b]);
    }
    bool all = true;
    const Ideal prime_ideal = prime.generators(ring);
    for (const auto& g : prime_ideal.generators()) {
      const bool witnessed = std::any_of(outside.begin(), outside.end(), [&](const Polynomial& s) {
        return ideal_member(g * s, p2, o.order, o.gb);
      });
      if (!witnessed) {
        all = false;
        facts.note("no witness for " + g.to_string() + " in " + prime.describe());
        break;
      }
    }
    own += all ? 1 : 0;
  }
  facts.add("minimal primes equal to their own component", std::uint64_t{primes.size()}, own);
  return facts.finish(id);
}

CheckResult check_gap_module(const SuiteOptions& o) {
  const std::string id = "gap.module";
  if (!o.field.two_is_unit()) return skipped(id, char2_reason(o));
  const Ring ring = ring_of(o);
  const Ideal p2 = permanental_ideal(ring);
  const Ideal rad = radical_generators(ring);
  Facts facts;

  const auto gaps = gap_monomials(p2, rad, static_cast<unsigned>(o.shape.matrix_vars()), o.order,
                                  o.gb);
  facts.add("gap length", gap_length_formula(o.shape), std::uint64_t{gaps.size()});

  std::set<std::string> expected;
  const int k_max = std::min(o.shape.m, o.shape.n);
  for (int k = 3; k <= k_max; ++k) {
    std::vector<bool> rmask(static_cast<std::size_t>(o.shape.m), false);
    std::fill(rmask.begin(), rmask.begin() + k, true);
    do {
      std::vector<int> rows;
      for (int i = 0; i < o.shape.m; ++i) {
        if (rmask[static_cast<std::size_t>(i)]) rows.push_back(i + 1);
      }
      std::vector<bool> cmask(static_cast<std::size_t>(o.shape.n), false);
      std::fill(cmask.begin(), cmask.begin() + k, true);
      do {
        std::vector<int> cols;
        for (int j = 0; j < o.shape.n; ++j) {
          if (cmask[static_cast<std::size_t>(j)]) cols.push_back(j + 1);
        }
        expected.insert(monomial_text(ring, anti_diagonal_product(o.shape, rows, cols)));
      } while (std::prev_permutation(cmask.begin(), cmask.end()));
    } while (std::prev_permutation(rmask.begin(), rmask.end()));
  }
  std::set<std::string> actual;
  for (const auto& g : gaps) actual.insert(monomial_text(ring, g));
  auto set_text = [](const std::set<std::string>& s) {
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : "; ") + x;
    return out;
  };
  facts.add("gap monomials", set_text(expected), set_text(actual));

  std::uint64_t anti = 0;
  for (const auto& g : gaps) anti += (is_anti_diagonal(g) && g.degree() >= 3) ? 1 : 0;
  facts.add("anti-diagonal gap monomials", std::uint64_t{gaps.size()}, anti);

  // A variable multiple of a gap monomial either lies in in(P2) or is a
  // larger anti-diagonal product that is itself in the gap.
  const auto leads = leading_monomials(p2.basis(o.order, o.gb), o.order);
  std::uint64_t landed = 0;
  std::uint64_t in_gap = 0;
  for (const auto& g : gaps) {
    for (int i = 1; i <= o.shape.m; ++i) {
      for (int j = 1; j <= o.shape.n; ++j) {
        const Monomial h = g * Monomial::variable(o.shape, VarRef::matrix(i, j));
        if (in_monomial_ideal(h, leads)) {
          ++landed;
        } else if (std::find(gaps.begin(), gaps.end(), h) != gaps.end()) {
          ++in_gap;
        }
      }
    }
  }
  facts.add("variable multiples in the initial ideal or the gap",
            std::uint64_t{gaps.size() * o.shape.matrix_vars()}, landed + in_gap);
  if (in_gap > 0) {
    facts.note(std::to_string(in_gap) + " variable multiples are themselves gap monomials");
  }
  return facts.finish(id);
}

CheckResult check_gb_equality(const SuiteOptions& o) {
  const std::string id = "gb.equality";
  if (!o.field.two_is_unit()) return skipped(id, char2_reason(o));
  const Ring ring = ring_of(o);
  const Ideal p2 = permanental_ideal(ring);
  const auto claimed = claimed_polynomials(claimed_gb(ring));
  Facts facts;
  for (const auto& order : {TermOrder::diag_lex(), TermOrder::diag_lex_transpose()}) {
    const auto& computed = p2.basis(order, o.gb);
    const auto expected = canonical(claimed, order);
    facts.add(order.name() + " size", gb_count_formula(o.shape), std::uint64_t{computed.size()});
    facts.add(order.name() + " basis", basis_text(expected, order), basis_text(computed, order));
    if (expected != computed) facts.note(basis_difference(expected, computed, order));
  }
  return facts.finish(id);
}

CheckResult check_integral_closure(const SuiteOptions& o) {
  const std::string id = "integral-closure";
  if (!o.field.two_is_unit()) return skipped(id, char2_reason(o));
  if (o.shape.m < 4 || o.shape.n < 4) return skipped(id, "needs at least four rows and columns");
  const Ring ring = ring_of(o);
  const Ideal p2 = permanental_ideal(ring);
  Facts facts;
  const Polynomial w = monomial_poly(ring, {{4, 1}, {3, 2}, {2, 3}, {1, 4}});
  const Polynomial factor = monomial_poly(ring, {{4, 1}, {3, 2}, {2, 3}, {2, 3}});
  facts.add("w in P2", false, ideal_member(w, p2, o.order, o.gb));
  facts.add(factor.to_string() + " in P2", true, ideal_member(factor, p2, o.order, o.gb));
  facts.add("w^2 in P2*P2", true, bigraded_member(w * w, ideal_product(p2, p2), o.order, o.gb));
  return facts.finish(id);
}

CheckResult check_niermann(const SuiteOptions& o) {
  const std::string id = "niermann";
  if (!o.field.two_is_unit()) return skipped(id, char2_reason(o));
  if (!small_shape(o.shape) && !o.allow_large) return skipped(id, large_reason(o.shape));
  const Ring ring = ring_of(o);
  Facts facts;

  const Polynomial a = Polynomial::entry(ring, 1, 1);
  const Polynomial b = Polynomial::entry(ring, 1, 2);
  const std::vector<std::pair<Ideal, Ideal>> two{{Ideal(ring, {a}), Ideal(ring, {b})},
                                                 {Ideal(ring, {b}), Ideal(ring, {a})}};
  facts.add("two-variable instance", true, niermann_check(two, o.order, o.gb));

  const auto pairs = block_niermann_pairs(ring);
  facts.add("block instance", true, niermann_check(pairs, o.order, o.gb));
  std::vector<Ideal> firsts;
  std::vector<Ideal> seconds;
  for (const auto& [I, J] : pairs) {
    firsts.push_back(I);
    seconds.push_back(J);
  }
  const Ideal rhs = ideal_sum(ideal_sum(firsts), intersect_all(seconds, o.order, o.gb));
  facts.add("block instance equals explicit third part", true,
            ideal_equal(rhs, unmixed_part(ring, 3), o.order, o.gb));
  return facts.finish(id);
}

CheckResult check_parameters(const SuiteOptions& o) {
  const std::string id = "parameters";
  if (!o.field.two_is_unit()) return skipped(id, char2_reason(o));
  const Ring ring = ring_of(o);
  const Shape& s = o.shape;
  const auto primes = minimal_primes(s);
  std::vector<Ideal> prime_ideals;
  for (const auto& p : primes) prime_ideals.push_back(p.generators(ring));
  Facts facts;

  std::uint64_t blocks = 0;
  std::uint64_t structural = 0;
  std::uint64_t computed = 0;
  for (std::size_t k = 0; k < primes.size(); ++k) {
    if (primes[k].kind != MinimalPrime::Kind::Block) continue;
    ++blocks;
    LinearForm off;
    for (const auto& v : primes[k].variables(s)) off.coeffs[{v.row, v.col}] = 1;
    structural += linear_form_in_prime(off, primes[k]) ? 1 : 0;
    computed += ideal_member(off.to_polynomial(ring), prime_ideals[k], o.order, o.gb) ? 1 : 0;
  }
  facts.add("off-block forms in their prime (structural)", blocks, structural);
  facts.add("off-block forms in their prime (membership)", blocks, computed);

  const LinearForm ones = LinearForm::all_ones(s);
  structural = 0;
  computed = 0;
  for (std::size_t k = 0; k < primes.size(); ++k) {
    structural += linear_form_in_prime(ones, primes[k]) ? 1 : 0;
    computed += ideal_member(ones.to_polynomial(ring), prime_ideals[k], o.order, o.gb) ? 1 : 0;
  }
  facts.add("primes containing the all-ones form (structural)", std::uint64_t{0}, structural);
  facts.add("primes containing the all-ones form (membership)", std::uint64_t{0}, computed);

  const std::size_t cells = s.matrix_vars();
  if (cells > 12) {
    facts.note("minimal parameter support is searched only up to 12 entries");
    return facts.finish(id);
  }
  // Each prime excludes the supports that miss a set of cells: the kept row,
  // the kept column, or the block.
  std::vector<std::uint32_t> must_hit;
  for (const auto& p : primes) {
    std::uint32_t mask = 0;
    for (int i = 1; i <= s.m; ++i) {
      for (int j = 1; j <= s.n; ++j) {
        if (!p.contains_variable(i, j)) mask |= 1u << static_cast<unsigned>((i - 1) * s.n + j - 1);
      }
    }
    must_hit.push_back(mask);
  }
  auto smallest = [&](const std::function<bool(std::uint32_t)>& ok) {
    for (unsigned size = 1; size <= cells; ++size) {
      for (std::uint32_t mask = 1; mask < (1u << cells); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) == size && ok(mask)) return size;
      }
    }
    return 0u;
  };
  const unsigned hitting = smallest([&](std::uint32_t mask) {
    return std::all_of(must_hit.begin(), must_hit.end(),
                       [&](std::uint32_t h) { return (mask & h) != 0; });
  });
  const unsigned brute = smallest([&](std::uint32_t mask) {
    LinearForm form;
    for (std::size_t c = 0; c < cells; ++c) {
      if (mask & (1u << c)) {
        form.coeffs[{static_cast<int>(c) / s.n + 1, static_cast<int>(c) % s.n + 1}] = 1;
      }
    }
    const Polynomial f = form.to_polynomial(ring);
    return std::none_of(prime_ideals.begin(), prime_ideals.end(),
                        [&](const Ideal& p) { return ideal_member(f, p, o.order, o.gb); });
  });
  facts.add("minimal parameter support", std::uint64_t{hitting}, std::uint64_t{brute});
  return facts.finish(id);
}

CheckResult check_minimal_primes(const SuiteOptions& o) {
  const std::string id = "primes.minimal";
  if (!o.field.two_is_unit()) return skipped(id, char2_reason(o));
  const Ring ring = ring_of(o);
  const Ideal p2 = permanental_ideal(ring);
  const auto primes = minimal_primes(o.shape);
  std::vector<Ideal> ideals;
  for (const auto& p : primes) ideals.push_back(p.generators(ring));
  Facts facts;

  facts.add("count", component_count(o.shape), std::uint64_t{primes.size()});
  if (component_count(o.shape) != primes.size()) {
    std::string listed;
    for (const auto& p : primes) listed += (listed.empty() ? "" : "; ") + p.describe();
    facts.note("enumerated: " + listed);
  }

  std::uint64_t containing = 0;
  for (const auto& P : ideals) containing += ideal_contains(P, p2, o.order, o.gb) ? 1 : 0;
  facts.add("primes containing P2", std::uint64_t{primes.size()}, containing);

  std::uint64_t incomparable = 0;
  for (std::size_t a = 0; a < ideals.size(); ++a) {
    for (std::size_t b = 0; b < ideals.size(); ++b) {
      if (a != b) incomparable += ideal_contains(ideals[a], ideals[b], o.order, o.gb) ? 0 : 1;
    }
  }
  facts.add("ordered pairs not contained", std::uint64_t{primes.size() * (primes.size() - 1)},
            incomparable);

  std::string expected_heights;
  std::string actual_heights;
  std::set<int> expected_set;
  std::set<int> actual_set;
  for (const auto& p : primes) {
    const int want = height_formula(p.kind, o.shape);
    const int got = p.height(o.shape);
    expected_heights += (expected_heights.empty() ? "" : ",") + std::to_string(want);
    actual_heights += (actual_heights.empty() ? "" : ",") + std::to_string(got);
    expected_set.insert(want);
    actual_set.insert(got);
  }
  facts.add("heights", expected_heights, actual_heights);
  auto set_text = [](const std::set<int>& s) {
    std::string out;
    for (int h : s) out += (out.empty() ? "" : ",") + std::to_string(h);
    return out;
  };
  facts.add("distinct heights", set_text(expected_set), set_text(actual_set));

  std::uint64_t blocks = 0;
  std::uint64_t rank4 = 0;
  for (std::size_t k = 0; k < primes.size(); ++k) {
    if (primes[k].kind != MinimalPrime::Kind::Block) continue;
    ++blocks;
    rank4 += quadratic_form_rank(ideals[k].generators().front()) == 4 ? 1 : 0;
  }
  facts.add("block quadrics of rank 4", blocks, rank4);
  return facts.finish(id);
}

CheckResult check_radical_basis(const SuiteOptions& o) {
  const std::string id = "radical.basis";
  if (!o.field.two_is_unit()) return skipped(id, char2_reason(o));
  const Ring ring = ring_of(o);
  const Ideal p2 = permanental_ideal(ring);
  const Ideal rad = radical_generators(ring);
  Facts facts;

  const auto expected = canonical(claimed_polynomials(claimed_radical_gb(ring)), o.order);
  const auto& computed = rad.basis(o.order, o.gb);
  facts.add("size", radical_gb_count_formula(o.shape), std::uint64_t{computed.size()});
  facts.add("basis", basis_text(expected, o.order), basis_text(computed, o.order));
  if (expected != computed) facts.note(basis_difference(expected, computed, o.order));

  const auto triples = squarefree_triples(ring);
  std::uint64_t outside = 0;
  std::uint64_t squares = 0;
  std::uint64_t radical = 0;
  for (const auto& g : triples) {
    outside += ideal_member(g, p2, o.order, o.gb) ? 0 : 1;
    squares += ideal_member(g * g, p2, o.order, o.gb) ? 1 : 0;
    radical += radical_member(g, p2, o.order, o.gb) ? 1 : 0;
  }
  const std::uint64_t n = triples.size();
  facts.add("squarefree triples", 6 * binomial(o.shape.m, 3) * binomial(o.shape.n, 3), n);
  facts.add("triples outside P2", n, outside);
  facts.add("triples with square in P2", n, squares);
  facts.add("triples in the radical of P2", n, radical);

  if (o.shape.m == 2 || o.shape.n == 2) {
    if (!small_shape(o.shape) && !o.allow_large) {
      facts.note(large_reason(o.shape));
    } else {
      std::vector<Ideal> families;
      if (o.shape.n >= 3) {
        families.push_back(
            family_intersection(ring, MinimalPrime::Kind::RowComplement, o.order, o.gb));
      }
      if (o.shape.m >= 3) {
        families.push_back(
            family_intersection(ring, MinimalPrime::Kind::ColComplement, o.order, o.gb));
      }
      families.push_back(family_intersection(ring, MinimalPrime::Kind::Block, o.order, o.gb));
      facts.add("intersection of minimal primes equals P2", true,
                ideal_equal(intersect_all(families, o.order, o.gb), p2, o.order, o.gb));
    }
  }
  return facts.finish(id);
}

CheckResult check_radical_intersection(const SuiteOptions& o) {
  const std::string id = "radical.intersection";
  if (!o.field.two_is_unit()) return skipped(id, char2_reason(o));
  if (!small_shape(o.shape) && !o.allow_large) return skipped(id, large_reason(o.shape));
  const Ring ring = ring_of(o);
  Facts facts;

  std::vector<Ideal> families;
  if (o.shape.n >= 3) {
    families.push_back(family_intersection(ring, MinimalPrime::Kind::RowComplement, o.order, o.gb));
    facts.add("row family equals I1", true,
              ideal_equal(families.back(), unmixed_part(ring, 1), o.order, o.gb));
  }
  if (o.shape.m >= 3) {
    families.push_back(family_intersection(ring, MinimalPrime::Kind::ColComplement, o.order, o.gb));
    facts.add("column family equals I2", true,
              ideal_equal(families.back(), unmixed_part(ring, 2), o.order, o.gb));
  }
  families.push_back(family_intersection(ring, MinimalPrime::Kind::Block, o.order, o.gb));
  facts.add("block family equals I3", true,
            ideal_equal(families.back(), unmixed_part(ring, 3), o.order, o.gb));
  facts.add("intersection of minimal primes equals the radical", true,
            ideal_equal(intersect_all(families, o.order, o.gb), radical_generators(ring), o.order,
                        o.gb));
  return facts.finish(id);
}

const std::vector<std::string>& check_ids() {
  static const std::vector<std::string> ids{
      "certificates", "char2.contrast", "decomposition.primary", "gap.module",
      "gb.equality",  "integral-closure", "niermann",            "parameters",
      "primes.minimal", "radical.basis", "radical.intersection",
  };
  return ids;
}

CheckResult run_check(const std::string& id, const SuiteOptions& options) {
  static const std::map<std::string, std::function<CheckResult(const SuiteOptions&)>> table{
      {"certificates", check_certificates},
      {"char2.contrast", check_char2_contrast},
      {"decomposition.primary", check_primary_decomposition},
      {"gap.module", check_gap_module},
      {"gb.equality", check_gb_equality},
      {"integral-closure", check_integral_closure},
      {"niermann", check_niermann},
      {"parameters", check_parameters},
      {"primes.minimal", check_minimal_primes},
      {"radical.basis", check_radical_basis},
      {"radical.intersection", check_radical_intersection},
  };
  const auto it = table.find(id);
  if (it == table.end()) throw RangeError("unknown check '" + id + "'");

  const auto start = Clock::now();
  CheckResult result;
  try {
    result = it->second(options);
  } catch (const BudgetExceeded& e) {
    result = CheckResult{id, CheckStatus::Timeout, {}, {}, e.what(), {}};
  } catch (const AlgebraError& e) {
    result = CheckResult{id, CheckStatus::Fail, {}, {}, std::string("error: ") + e.what(), {}};
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return result;
}

Report run_suite(const SuiteOptions& options) {
  Report report{options.shape, options.field, options.order, tool_version(), {}};
  std::vector<std::string> ids = options.checks.empty() ? check_ids() : options.checks;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (const auto& id : ids) {
    if (std::find(check_ids().begin(), check_ids().end(), id) == check_ids().end()) {
      throw RangeError("unknown check '" + id + "'");
    }
  }
  for (const auto& id : ids) report.checks.push_back(run_check(id, options));
  return report;
}

std::string render_text(const Report& report) {
  std::ostringstream out;
  out << "shape " << report.shape.to_string() << "  field " << report.field.name() << "  order "
      << report.order.name() << "\n";
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.id.size());
  for (const auto& c : report.checks) {
    out << c.id << std::string(width - c.id.size() + 2, ' ') << to_string(c.status);
    if (c.status != CheckStatus::Pass && !c.detail.empty()) {
      const auto nl = c.detail.find('\n');
      out << "  (" << c.detail.substr(0, nl) << (nl == std::string::npos ? "" : " ...") << ")";
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace permideal
