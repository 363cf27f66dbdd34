#include "torideg/groebner.hpp"

#include <algorithm>
#include <map>
#include <limits>

#include "torideg/error.hpp"
#include "torideg/linalg.hpp"

namespace torideg {

Ideal::Ideal(RingPtr ring, std::vector<MultiPoly> generators) : ring_(std::move(ring)) {
  for (auto& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw DomainError("ideal generator lives in a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

bool Ideal::is_homogeneous() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const MultiPoly& g) { return torideg::is_homogeneous(g); });
}

bool Ideal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const MultiPoly& g) { return g.is_monomial(); });
}

MarkedGroebnerBasis::MarkedGroebnerBasis(RingPtr ring, TermOrder order, std::vector<MultiPoly> elements,
                                         std::vector<Monomial> leads, bool reduced)
    : ring_(std::move(ring)),
      order_(std::move(order)),
      elements_(std::move(elements)),
      leads_(std::move(leads)),
      reduced_(reduced) {
  if (elements_.size() != leads_.size()) throw DomainError("one marked lead per basis element required");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (!same_ring(elements_[i].ring(), ring_)) throw DomainError("basis element lives in a different ring");
    if (elements_[i].coefficient(leads_[i]) == 0) throw DomainError("marked lead is not a term of its element");
  }
}

Ideal MarkedGroebnerBasis::lead_ideal() const {
  std::vector<MultiPoly> gens;
  for (const auto& m : leads_) gens.push_back(MultiPoly::monomial(ring_, m));
  return Ideal(ring_, std::move(gens));
}

std::vector<std::vector<long>> MarkedGroebnerBasis::difference_vectors() const {
  std::vector<std::vector<long>> out;
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (const auto& [m, c] : elements_[i].terms()) {
      if (m == leads_[i]) continue;
      std::vector<long> d(m.size());
      for (std::size_t j = 0; j < m.size(); ++j) d[j] = long(leads_[i][j]) - long(m[j]);
      out.push_back(std::move(d));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Reduction engine. Polynomials are term vectors sorted decreasingly in a
// compiled order; subtracting a monomial multiple is a linear merge.

namespace {

struct Term {
  Monomial m;
  Rational c;
};
using TPoly = std::vector<Term>;

std::uint64_t divmask(const Monomial& m) {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < m.size(); ++j)
    if (m[j] > 0) mask |= std::uint64_t{1} << (j % 64);
  return mask;
}

class Engine {
 public:
  explicit Engine(CompiledOrder order) : O_(std::move(order)) {}

  const CompiledOrder& order() const { return O_; }

  TPoly from(const MultiPoly& f) const {
    TPoly p;
    p.reserve(f.size());
    for (const auto& [m, c] : f.terms()) p.push_back({m, c});
    std::sort(p.begin(), p.end(), [this](const Term& a, const Term& b) { return O_.greater(a.m, b.m); });
    for (std::size_t i = 1; i < p.size(); ++i)
      if (O_.compare(p[i - 1].m, p[i].m) == Cmp::eq) throw DomainError("term order is not total on this input");
    return p;
  }

  MultiPoly to(const RingPtr& ring, const TPoly& p) const {
    std::vector<MultiPoly::Term> terms;
    terms.reserve(p.size());
    for (const auto& t : p) terms.emplace_back(t.m, t.c);
    return MultiPoly::from_terms(ring, std::move(terms));
  }

  /// p[from..] -= c * m * g, keeping p[0..from) untouched.
  void sub_multiple(TPoly& p, std::size_t from, const Rational& c, const Monomial& m, const TPoly& g) const {
    TPoly out;
    out.reserve(p.size() + g.size());
    for (std::size_t i = 0; i < from; ++i) out.push_back(std::move(p[i]));
    std::size_t i = from, j = 0;
    while (i < p.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(std::move(p[i++]));
        continue;
      }
      Monomial gm = g[j].m * m;
      Cmp cmp = i < p.size() ? O_.compare(p[i].m, gm) : Cmp::lt;
      if (cmp == Cmp::gt) {
        out.push_back(std::move(p[i++]));
      } else if (cmp == Cmp::lt) {
        out.push_back({std::move(gm), -c * g[j].c});
        ++j;
      } else {
        Rational v = p[i].c - c * g[j].c;
        if (v != 0) out.push_back({std::move(gm), std::move(v)});
        ++i;
        ++j;
      }
    }
    p = std::move(out);
  }

  struct Reducer {
    const TPoly* poly;
    const Monomial* lead;
    std::uint64_t mask;
  };

  const Reducer* find_reducer(const std::vector<Reducer>& rs, const Monomial& m) const {
    std::uint64_t mm = divmask(m);
    for (const auto& r : rs)
      if ((r.mask & ~mm) == 0 && r.lead->divides(m)) return &r;
    return nullptr;
  }

  /// Full reduction: no term of the result is divisible by a reducer lead.
  void reduce(TPoly& p, const std::vector<Reducer>& rs, std::size_t from = 0) const {
    std::size_t i = from;
    while (i < p.size()) {
      const Reducer* r = find_reducer(rs, p[i].m);
      if (!r) {
        ++i;
        continue;
      }
      Rational c = p[i].c / r->poly->front().c;
      Monomial q = r->lead->quotient_of(p[i].m);
      sub_multiple(p, i, c, q, *r->poly);
    }
  }

  /// Top reduction only: stops at the first irreducible leading term.
  void reduce_top(TPoly& p, const std::vector<Reducer>& rs) const {
    while (!p.empty()) {
      const Reducer* r = find_reducer(rs, p.front().m);
      if (!r) return;
      Rational c = p.front().c / r->poly->front().c;
      Monomial q = r->lead->quotient_of(p.front().m);
      sub_multiple(p, 0, c, q, *r->poly);
    }
  }

 private:
  CompiledOrder O_;
};

void make_monic(TPoly& p) {
  if (p.empty() || p.front().c == 1) return;
  Rational inv = 1 / p.front().c;
  for (auto& t : p) t.c *= inv;
}

struct Pair {
  std::size_t i, j;
  Monomial lcm;
};

/// Buchberger with the normal selection strategy and Gebauer-Möller pair updates.
std::vector<TPoly> run_buchberger(const Engine& E, std::vector<TPoly> input) {
  std::vector<TPoly> G;
  std::vector<bool> active;
  std::vector<Pair> pairs;

  auto lead = [&](std::size_t k) -> const Monomial& { return G[k].front().m; };

  auto reducers = [&]() {
    std::vector<Engine::Reducer> rs;
    for (std::size_t k = 0; k < G.size(); ++k)
      if (active[k]) rs.push_back({&G[k], &G[k].front().m, divmask(G[k].front().m)});
    return rs;
  };

  auto insert = [&](TPoly h) {
    make_monic(h);
    const std::size_t hn = G.size();
    G.push_back(std::move(h));
    active.push_back(true);
    const Monomial& lh = lead(hn);

    // Candidate pairs with h.
    struct Cand {
      std::size_t k;
      Monomial lcm;
      bool coprime;
      bool keep = true;
    };
    std::vector<Cand> cands;
    for (std::size_t k = 0; k < hn; ++k)
      if (active[k]) cands.push_back({k, lead(k).lcm(lh), lead(k).coprime(lh)});
    // Criterion M: drop pairs whose lcm is properly divisible by another lcm.
    for (auto& a : cands)
      for (const auto& b : cands)
        if (&a != &b && b.lcm.divides(a.lcm) && b.lcm != a.lcm) {
          a.keep = false;
          break;
        }
    // Criterion F: one pair per lcm, dropping the class if any member is coprime.
    std::map<Monomial, std::vector<Cand*>> by_lcm;
    for (auto& a : cands)
      if (a.keep) by_lcm[a.lcm].push_back(&a);
    std::vector<Pair> fresh;
    for (auto& [l, group] : by_lcm) {
      bool any_coprime = std::any_of(group.begin(), group.end(), [](Cand* c) { return c->coprime; });
      if (!any_coprime) fresh.push_back({group.front()->k, hn, l});
    }
    // Criterion B on old pairs.
    std::vector<Pair> kept;
    for (auto& p : pairs) {
      bool drop = lh.divides(p.lcm) && lead(p.i).lcm(lh) != p.lcm && lead(p.j).lcm(lh) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    pairs = std::move(kept);
    for (auto& p : fresh) pairs.push_back(std::move(p));
    // Elements whose lead h divides take no further part in pair creation.
    for (std::size_t k = 0; k < hn; ++k)
      if (active[k] && lh.divides(lead(k))) active[k] = false;
  };

  // Seed with interreduced input, smallest leads first.
  std::sort(input.begin(), input.end(),
            [&](const TPoly& a, const TPoly& b) { return E.order().greater(b.front().m, a.front().m); });
  for (auto& f : input) {
    auto rs = reducers();
    E.reduce(f, rs);
    if (!f.empty()) insert(std::move(f));
  }

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      Cmp c = E.order().compare(a.lcm, b.lcm);
      if (c != Cmp::eq) return c == Cmp::lt;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair p = std::move(*best);
    pairs.erase(best);

    const TPoly& f = G[p.i];
    const TPoly& g = G[p.j];
    TPoly s;
    {
      Monomial qf = f.front().m.quotient_of(p.lcm);
      Monomial qg = g.front().m.quotient_of(p.lcm);
      // s = qf*f - qg*g with both monic.
      s.reserve(f.size() + g.size());
      for (std::size_t k = 1; k < f.size(); ++k) s.push_back({f[k].m * qf, f[k].c});
      TPoly g_tail(g.begin() + 1, g.end());
      E.sub_multiple(s, 0, 1, qg, g_tail);
    }
    auto rs = reducers();
    E.reduce_top(s, rs);
    if (!s.empty()) {
      E.reduce(s, rs, 1);
      insert(std::move(s));
    }
  }

  // Minimal basis, then interreduce.
  std::vector<TPoly> minimal;
  for (std::size_t k = 0; k < G.size(); ++k) {
    bool redundant = false;
    for (std::size_t l = 0; l < G.size() && !redundant; ++l) {
      if (l == k || !lead(l).divides(lead(k))) continue;
      redundant = lead(l) != lead(k) || l < k;
    }
    if (!redundant) minimal.push_back(G[k]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const TPoly& a, const TPoly& b) { return E.order().greater(a.front().m, b.front().m); });
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    std::vector<Engine::Reducer> rs;
    for (std::size_t l = 0; l < minimal.size(); ++l)
      if (l != k) rs.push_back({&minimal[l], &minimal[l].front().m, divmask(minimal[l].front().m)});
    E.reduce(minimal[k], rs, 1);
  }
  return minimal;
}

CompiledOrder compile_for(const Ideal& I, const TermOrder& order) {
  const std::size_t n = I.ring()->nvars();
  CompiledOrder O = order.compile(n);
  if (I.is_homogeneous()) O = O.prefixed(I.ring()->positive_weight());
  else if (!O.well_order())
    throw DomainError("term order '" + order.to_string() + "' is not a well-order and the ideal is not homogeneous");
  if (!O.total()) throw DomainError("term order '" + order.to_string() + "' is not total; add a tie-break");
  return O;
}

}  // namespace

MarkedGroebnerBasis buchberger(const Ideal& I, const TermOrder& order) {
  Engine E(compile_for(I, order));
  std::vector<TPoly> input;
  for (const auto& g : I.generators()) input.push_back(E.from(g));
  std::vector<TPoly> basis = run_buchberger(E, std::move(input));
  std::vector<MultiPoly> elements;
  std::vector<Monomial> leads;
  for (const auto& p : basis) {
    leads.push_back(p.front().m);
    elements.push_back(E.to(I.ring(), p));
  }
  return MarkedGroebnerBasis(I.ring(), order, std::move(elements), std::move(leads), true);
}

MultiPoly normal_form(const MultiPoly& f, const MarkedGroebnerBasis& G) {
  if (!same_ring(f.ring(), G.ring())) throw DomainError("normal form: ring mismatch");
  const std::size_t n = G.ring()->nvars();
  CompiledOrder O = G.order().compile(n);
  bool homogeneous = G.ideal().is_homogeneous();
  if (homogeneous) O = O.prefixed(G.ring()->positive_weight());
  if (!O.total() || !(homogeneous || O.well_order())) {
    // Marked basis whose order cannot sort terms: reduce by markings directly.
    std::map<Monomial, Rational> rem;
    for (const auto& [m, c] : f.terms()) rem[m] = c;
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto it = rem.begin(); it != rem.end(); ++it) {
        for (std::size_t k = 0; k < G.size(); ++k) {
          if (!G.leads()[k].divides(it->first)) continue;
          Rational c = it->second / G.elements()[k].coefficient(G.leads()[k]);
          Monomial q = G.leads()[k].quotient_of(it->first);
          for (const auto& [m, d] : G.elements()[k].terms()) {
            auto& slot = rem[m * q];
            slot -= c * d;
          }
          for (auto jt = rem.begin(); jt != rem.end();) jt = jt->second == 0 ? rem.erase(jt) : std::next(jt);
          changed = true;
          break;
        }
        if (changed) break;
      }
    }
    std::vector<MultiPoly::Term> terms(rem.begin(), rem.end());
    return MultiPoly::from_terms(f.ring(), std::move(terms));
  }
  Engine E(O);
  std::vector<TPoly> basis;
  basis.reserve(G.size());
  for (const auto& g : G.elements()) basis.push_back(E.from(g));
  std::vector<Engine::Reducer> rs;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (basis[k].front().m != G.leads()[k]) throw DomainError("marked lead is not maximal for the basis order");
    rs.push_back({&basis[k], &basis[k].front().m, divmask(basis[k].front().m)});
  }
  TPoly p = E.from(f);
  E.reduce(p, rs);
  return E.to(f.ring(), p);
}

bool ideal_contains(const MarkedGroebnerBasis& G, const MultiPoly& f) { return normal_form(f, G).is_zero(); }

bool is_groebner_basis(const Ideal& I, const TermOrder& order) {
  Engine E(compile_for(I, order));
  std::vector<TPoly> G;
  for (const auto& g : I.generators()) {
    G.push_back(E.from(g));
    make_monic(G.back());
  }
  std::vector<Engine::Reducer> rs;
  for (const auto& g : G) rs.push_back({&g, &g.front().m, divmask(g.front().m)});
  for (std::size_t i = 0; i < G.size(); ++i)
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      const Monomial& a = G[i].front().m;
      const Monomial& b = G[j].front().m;
      if (a.coprime(b)) continue;
      Monomial l = a.lcm(b);
      Monomial qa = a.quotient_of(l), qb = b.quotient_of(l);
      TPoly s;
      for (std::size_t k = 1; k < G[i].size(); ++k) s.push_back({G[i][k].m * qa, G[i][k].c});
      TPoly tail(G[j].begin() + 1, G[j].end());
      E.sub_multiple(s, 0, 1, qb, tail);
      E.reduce(s, rs);
      if (!s.empty()) return false;
    }
  return true;
}

MultiPoly initial_form(const MultiPoly& f, const QVector& w) {
  if (f.is_zero()) throw DomainError("initial form of the zero polynomial");
  if (w.size() != f.ring()->nvars()) throw DomainError("weight length differs from variable count");
  std::vector<Rational> vals;
  for (const auto& [m, c] : f.terms()) {
    Rational v = 0;
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j]) v += w[j] * m[j];
    vals.push_back(v);
  }
  Rational best = *std::max_element(vals.begin(), vals.end());
  std::vector<MultiPoly::Term> keep;
  for (std::size_t k = 0; k < vals.size(); ++k)
    if (vals[k] == best) keep.push_back(f.terms()[k]);
  return MultiPoly::from_terms(f.ring(), std::move(keep));
}

MultiPoly initial_form_matrix(const MultiPoly& f, const WeightingMatrix& W) {
  if (f.is_zero()) throw DomainError("initial form of the zero polynomial");
  std::vector<QVector> vals;
  for (const auto& [m, c] : f.terms()) vals.push_back(W.apply(m));
  std::size_t best = 0;
  for (std::size_t k = 1; k < vals.size(); ++k)
    if (W.order.compare(vals[k], vals[best]) == Cmp::gt) best = k;
  std::vector<MultiPoly::Term> keep;
  for (std::size_t k = 0; k < vals.size(); ++k)
    if (W.order.compare(vals[k], vals[best]) == Cmp::eq) keep.push_back(f.terms()[k]);
  return MultiPoly::from_terms(f.ring(), std::move(keep));
}

TermOrder refine(const QVector& w, const TermOrder& tie) { return TermOrder::weighted(w, tie); }

TermOrder refine(const WeightingMatrix& W, const TermOrder& tie) {
  // Values compare by the Z^d order rows applied to M.
  QMatrix rows;
  if (W.order.is_lex()) {
    rows = W.M;
  } else {
    for (const auto& r : W.order.rows()) {
      QVector row(W.M.empty() ? 0 : W.M[0].size(), 0);
      for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < row.size(); ++j) row[j] += r[i] * W.M[i][j];
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return tie;
  return TermOrder::matrix(std::move(rows), tie);
}

InitialIdeal initial_ideal(const Ideal& I, const QVector& w, const TermOrder& tie) {
  if (!I.is_homogeneous()) {
    for (const auto& x : w)
      if (x < 0) throw DomainError("initial ideal of a non-homogeneous ideal needs a nonnegative weight");
  }
  MarkedGroebnerBasis G = buchberger(I, refine(w, tie));
  std::vector<MultiPoly> gens;
  for (const auto& g : G.elements()) gens.push_back(initial_form(g, w));
  return {Ideal(I.ring(), std::move(gens)), std::move(G)};
}

InitialIdeal initial_ideal(const Ideal& I, const WeightingMatrix& W, const TermOrder& tie) {
  MarkedGroebnerBasis G = buchberger(I, refine(W, tie));
  std::vector<MultiPoly> gens;
  for (const auto& g : G.elements()) gens.push_back(initial_form_matrix(g, W));
  return {Ideal(I.ring(), std::move(gens)), std::move(G)};
}

MultiPoly homogenize_poly(const MultiPoly& f, const ZVector& w, const RingPtr& target) {
  const std::size_t n = f.ring()->nvars();
  if (w.size() != n) throw DomainError("weight length differs from variable count");
  if (target->nvars() != n + 1) throw DomainError("homogenization target needs exactly one extra variable");
  if (f.is_zero()) return MultiPoly(target);
  std::vector<Integer> vals;
  for (const auto& [m, c] : f.terms()) {
    Integer v = 0;
    for (std::size_t j = 0; j < n; ++j) v += w[j] * m[j];
    vals.push_back(v);
  }
  Integer mu = *std::max_element(vals.begin(), vals.end());
  std::vector<MultiPoly::Term> terms;
  for (std::size_t k = 0; k < vals.size(); ++k) {
    std::vector<Exponent> e(f.terms()[k].first.exponents());
    Integer te = mu - vals[k];
    if (!te.fits_sint_p()) throw LimitError("homogenizing exponent overflow");
    e.push_back(static_cast<Exponent>(te.get_si()));
    terms.emplace_back(Monomial(std::move(e)), f.terms()[k].second);
  }
  return MultiPoly::from_terms(target, std::move(terms));
}

Ideal homogenize(const Ideal& I, const ZVector& w, const TermOrder& tie, const std::string& tname) {
  const Ring& R = *I.ring();
  const std::size_t n = R.nvars();
  if (w.size() != n) throw DomainError("weight length differs from variable count");
  QVector wq = to_rational(w);
  MarkedGroebnerBasis G = buchberger(I, refine(wq, tie));
  // Grading of k[x,t]: old rows (t in degree 0) and the row (w, 1), shifted
  // by a multiple of the positive weight until nonnegative.
  Ring::Grading grading;
  for (const auto& row : R.grading()) {
    auto r = row;
    r.push_back(0);
    grading.push_back(std::move(r));
  }
  long shift = 0;
  const auto& pw = R.positive_weight();
  for (std::size_t j = 0; j < n; ++j) {
    Integer need = -w[j];
    if (need > 0) {
      Integer k = (need + pw[j] - 1) / pw[j];
      shift = std::max(shift, k.get_si());
    }
  }
  std::vector<long> extra;
  for (std::size_t j = 0; j < n; ++j) extra.push_back(w[j].get_si() + shift * pw[j]);
  extra.push_back(1);
  grading.push_back(std::move(extra));
  RingPtr target = R.extend({tname}, grading);
  std::vector<MultiPoly> gens;
  for (const auto& g : G.elements()) gens.push_back(homogenize_poly(g, w, target));
  return Ideal(target, std::move(gens));
}

std::vector<Monomial> monomials_of_degree(const Ring& ring, const std::vector<long>& degree) {
  if (degree.size() != ring.grading_rows()) throw DomainError("degree length differs from grading rows");
  const std::size_t n = ring.nvars();
  const auto& pw = ring.positive_weight();
  long budget = 0;
  for (std::size_t r = 0; r < degree.size(); ++r) {
    if (degree[r] < 0) return {};
    budget += degree[r];
  }
  // Enumerate exponent vectors with pw.a = budget, then filter by full degree.
  std::vector<Monomial> out;
  Monomial cur(n);
  std::vector<long> used(degree.size(), 0);
  auto rec = [&](auto&& self, std::size_t j, long left) -> void {
    if (j == n) {
      if (left == 0 && ring.degree_of(cur) == degree) out.push_back(cur);
      return;
    }
    for (long e = 0; e * pw[j] <= left; ++e) {
      cur[j] = static_cast<Exponent>(e);
      self(self, j + 1, left - e * pw[j]);
    }
    cur[j] = 0;
  };
  rec(rec, 0, budget);
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return grevlex_greater(a, b); });
  return out;
}

std::vector<Monomial> standard_monomials(const Ideal& J, const std::vector<long>& degree) {
  if (!J.is_monomial()) throw DomainError("standard monomials need a monomial ideal");
  std::vector<Monomial> gens;
  for (const auto& g : J.generators()) gens.push_back(g.terms()[0].first);
  std::vector<Monomial> out;
  for (auto& m : monomials_of_degree(*J.ring(), degree)) {
    bool divisible = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!divisible) out.push_back(std::move(m));
  }
  return out;
}

bool same_ideal(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) return false;
  return buchberger(a, TermOrder::grevlex()).elements() == buchberger(b, TermOrder::grevlex()).elements();
}

Ideal saturate_variable(const Ideal& J, std::size_t var) {
  const std::size_t n = J.ring()->nvars();
  if (var >= n) throw DomainError("saturation variable out of range");
  if (!J.is_homogeneous()) throw DomainError("variable saturation requires a homogeneous ideal");
  // Order by degree, then by smallest x_var exponent: for homogeneous g,
  // x_var divides every term as soon as it divides lead(g), so the quotients
  // g / x_var^k generate the saturation.
  QMatrix rows{to_rational(J.ring()->positive_weight()), QVector(n, 0)};
  rows[1][var] = -1;
  MarkedGroebnerBasis G = buchberger(J, TermOrder::matrix(std::move(rows), TermOrder::grevlex()));
  std::vector<MultiPoly> gens;
  for (const auto& g : G.elements()) {
    Exponent k = std::numeric_limits<Exponent>::max();
    for (const auto& [m, c] : g.terms()) k = std::min(k, m[var]);
    if (k == 0) {
      gens.push_back(g);
      continue;
    }
    std::vector<MultiPoly::Term> terms;
    for (auto [m, c] : g.terms()) {
      m[var] -= k;
      terms.emplace_back(std::move(m), c);
    }
    gens.push_back(MultiPoly::from_terms(J.ring(), std::move(terms)));
  }
  return Ideal(J.ring(), std::move(gens));
}

namespace {

// Smallest set of variables meeting the support of every lead monomial.
void min_hitting_set(const std::vector<std::vector<std::size_t>>& supports, std::vector<bool>& chosen,
                     std::size_t size, std::size_t& best) {
  if (size >= best) return;
  for (const auto& s : supports) {
    bool hit = std::any_of(s.begin(), s.end(), [&](std::size_t v) { return chosen[v]; });
    if (hit) continue;
    for (std::size_t v : s) {
      chosen[v] = true;
      min_hitting_set(supports, chosen, size + 1, best);
      chosen[v] = false;
    }
    return;
  }
  best = size;
}

}  // namespace

std::size_t krull_dimension(const Ideal& I) {
  const std::size_t n = I.ring()->nvars();
  MarkedGroebnerBasis G = buchberger(I, TermOrder::grevlex());
  std::vector<std::vector<std::size_t>> supports;
  for (const auto& m : G.leads()) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < n; ++j)
      if (m[j] > 0) s.push_back(j);
    if (s.empty()) return 0;  // unit ideal; treated as dimension 0
    supports.push_back(std::move(s));
  }
  std::vector<bool> chosen(n, false);
  std::size_t best = n;
  min_hitting_set(supports, chosen, 0, best);
  return n - best;
}

}  // namespace torideg
