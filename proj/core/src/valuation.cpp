#include "torideg/valuation.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "torideg/error.hpp"
#include "torideg/linalg.hpp"

namespace torideg {

namespace {

QVector row_sum(const QMatrix& M, std::size_t n) {
  QVector w(n, 0);
  for (const auto& r : M)
    for (std::size_t j = 0; j < n; ++j) w[j] += r[j];
  return w;
}

QVector column_value(const QMatrix& M, const Monomial& a) {
  QVector v(M.size(), 0);
  for (std::size_t i = 0; i < M.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j] != 0) v[i] += M[i][j] * a[j];
  return v;
}

/// Nonnegative integer k with sum_j k_j gens[j] = target, found by depth-first
/// search preferring earlier generators with larger exponents. `bound[j]`
/// caps k_j.
std::optional<std::vector<Exponent>> decompose(const std::vector<QVector>& gens, const QVector& target,
                                               const std::vector<long>& bound) {
  std::vector<Exponent> k(gens.size(), 0);
  std::function<bool(std::size_t, const QVector&)> rec = [&](std::size_t j, const QVector& rest) {
    if (std::all_of(rest.begin(), rest.end(), [](const Rational& x) { return x == 0; })) {
      std::fill(k.begin() + static_cast<long>(j), k.end(), 0);
      return true;
    }
    if (j == gens.size()) return false;
    for (long e = bound[j]; e >= 0; --e) {
      QVector next = rest;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] -= e * gens[j][i];
      k[j] = static_cast<Exponent>(e);
      if (rec(j + 1, next)) return true;
    }
    k[j] = 0;
    return false;
  };
  if (rec(0, target)) return k;
  return std::nullopt;
}

const std::vector<long>& first_grading_row(const Ring& ring) { return ring.grading()[0]; }

QVector scaled_column(const QMatrix& M, std::size_t j, long degree) {
  if (degree <= 0) throw DomainError("variable of nonpositive degree in the first grading row");
  QVector c(M.size());
  for (std::size_t i = 0; i < M.size(); ++i) c[i] = M[i][j] / degree;
  return c;
}

}  // namespace

ValuationProfile::ValuationProfile(Ideal I, WeightingMatrix W, const TermOrder& chamber_tie)
    : ideal_(std::move(I)),
      weighting_(std::move(W)),
      chamber_(buchberger(ideal_, refine(row_sum(weighting_.M, ideal_.ring()->nvars()), chamber_tie))) {
  check_chamber();
}

ValuationProfile::ValuationProfile(Ideal I, WeightingMatrix W, MarkedGroebnerBasis chamber)
    : ideal_(std::move(I)), weighting_(std::move(W)), chamber_(std::move(chamber)) {
  if (!same_ring(chamber_.ring(), ideal_.ring())) throw DomainError("chamber basis lives in another ring");
  check_chamber();
}

void ValuationProfile::check_chamber() const {
  const std::size_t n = ideal_.ring()->nvars();
  if (weighting_.M.empty()) throw DomainError("weighting matrix has no rows");
  for (const auto& r : weighting_.M)
    if (r.size() != n) throw DomainError("weighting matrix width differs from the variable count");
  Cone C = groebner_cone(chamber_);
  for (const auto& r : weighting_.M)
    if (!C.contains(r)) throw DomainError("weighting matrix row " + to_string(r) + " lies outside the chamber");
}

ZMatrix ValuationProfile::integer_matrix() const { return to_integer_rows_exact(weighting_.M); }

const PrimeVerdict& ValuationProfile::verdict() const {
  if (!verdict_) verdict_ = prime_verdict(initial_ideal(ideal_, weighting_).ideal, integer_matrix());
  return *verdict_;
}

QVector quasival_eval(const ValuationProfile& P, const MultiPoly& f) {
  if (!same_ring(f.ring(), P.ring())) throw DomainError("polynomial lives in another ring");
  MultiPoly nf = normal_form(f, P.chamber());
  if (nf.is_zero()) throw DomainError("the value of an element of the ideal is undefined");
  std::optional<QVector> best;
  for (const auto& [b, c] : nf.terms()) {
    QVector v = P.weighting().apply(b);
    if (!best || P.weighting().order.compare(v, *best) == Cmp::gt) best = std::move(v);
  }
  return *best;
}

MultiPoly subduction(const MultiPoly& f, const ValuationProfile& P) {
  if (!same_ring(f.ring(), P.ring())) throw DomainError("polynomial lives in another ring");
  const RingPtr& ring = P.ring();
  const std::size_t n = ring->nvars();
  const WeightingMatrix& W = P.weighting();
  const QVector zero(W.rows(), 0);
  std::vector<QVector> gens;
  for (std::size_t j = 0; j < n; ++j) {
    QVector v = quasival_eval(P, MultiPoly::variable(ring, j));
    if (W.order.compare(v, zero) != Cmp::gt)
      throw DomainError("generator values are not positive, so the value semigroup is not minimum well-ordered");
    gens.push_back(std::move(v));
  }
  if (!P.verdict().prime()) throw DomainError("subduction needs a prime profile: " + P.verdict().failure());

  // Leading standard monomial of g: unique for prime profiles.
  auto leading = [&](const MultiPoly& g) {
    std::optional<QVector> best;
    std::vector<const MultiPoly::Term*> at;
    for (const auto& t : g.terms()) {
      QVector v = W.apply(t.first);
      Cmp c = best ? W.order.compare(v, *best) : Cmp::gt;
      if (c == Cmp::gt) {
        best = std::move(v);
        at.assign(1, &t);
      } else if (c == Cmp::eq) {
        at.push_back(&t);
      }
    }
    if (at.size() != 1) throw DomainError("value shared by several standard monomials; leaves are not one-dimensional");
    return std::make_pair(*best, at[0]);
  };

  MultiPoly expr = MultiPoly::constant(ring, 0);
  MultiPoly g = normal_form(f, P.chamber());
  while (!g.is_zero()) {
    auto [v, term] = leading(g);
    std::vector<long> bound(n);
    for (std::size_t j = 0; j < n; ++j) {
      Rational q = v[0] / gens[j][0];
      bound[j] = gens[j][0] > 0 ? static_cast<long>(mpz_get_si(Integer(q).get_mpz_t())) : 0;
    }
    auto k = decompose(gens, v, bound);
    if (!k) throw DomainError("value " + to_string(v) + " is not generated by the generator values");
    Monomial mono(*k);
    MultiPoly h = normal_form(MultiPoly::monomial(ring, mono), P.chamber());
    auto [hv, hterm] = leading(h);
    if (W.order.compare(hv, v) != Cmp::eq || hterm->first != term->first)
      throw DomainError("valuation is not additive on the generators");
    Rational c = term->second / hterm->second;
    g = g - h.scaled(c);
    expr = expr + MultiPoly::monomial(ring, mono, c);
    if (!g.is_zero() && W.order.compare(leading(g).first, v) != Cmp::lt)
      throw DomainError("subduction step did not decrease the value");
  }
  return expr;
}

MultiPoly subduction(const MultiPoly& f, const std::vector<MultiPoly>& images, const TermOrder& order,
                     const RingPtr& target) {
  const RingPtr& B = f.ring();
  if (target->nvars() != images.size()) throw DomainError("target ring needs one variable per image");
  const std::size_t n = B->nvars();
  CompiledOrder O = order.compile(n);
  if (!O.total()) throw DomainError("subduction order must be total");
  auto lead = [&](const MultiPoly& g) {
    const MultiPoly::Term* best = &g.terms()[0];
    for (const auto& t : g.terms())
      if (O.greater(t.first, best->first)) best = &t;
    return *best;
  };
  const Monomial one(n);
  std::vector<QVector> gens;
  for (const auto& b : images) {
    if (!same_ring(b.ring(), B)) throw DomainError("image lives in another ring");
    if (b.is_zero()) throw DomainError("zero image");
    Monomial m = lead(b).first;
    if (!O.greater(m, one)) throw DomainError("image leads are not above 1, so the value semigroup is not well-ordered");
    gens.push_back(to_rational(std::vector<long>(m.exponents().begin(), m.exponents().end())));
  }
  MultiPoly expr = MultiPoly::constant(target, 0);
  MultiPoly g = f;
  while (!g.is_zero()) {
    auto [a, c] = lead(g);
    if (a.is_one()) {
      expr = expr + MultiPoly::constant(target, c);
      g = g - MultiPoly::constant(B, c);
      continue;
    }
    QVector v = to_rational(std::vector<long>(a.exponents().begin(), a.exponents().end()));
    std::vector<long> bound(images.size());
    for (std::size_t j = 0; j < images.size(); ++j) {
      long da = a.total_degree(), dg = static_cast<long>(mpz_get_si(Integer(dot(gens[j], QVector(n, 1))).get_mpz_t()));
      bound[j] = dg > 0 ? da / dg : 0;
    }
    auto k = decompose(gens, v, bound);
    if (!k) throw DomainError("lead monomial is not a product of image leads; images are not a Khovanskii basis");
    MultiPoly h = MultiPoly::constant(B, 1);
    for (std::size_t j = 0; j < images.size(); ++j) h = h * images[j].pow(static_cast<unsigned>((*k)[j]));
    Rational scale = c / h.coefficient(a);
    g = g - h.scaled(scale);
    expr = expr + MultiPoly::monomial(target, Monomial(*k), scale);
    if (!g.is_zero() && !O.greater(a, lead(g).first)) throw DomainError("subduction step did not decrease the lead");
  }
  return expr;
}

bool SemigroupSlice::contains(const QVector& v) const {
  return std::any_of(values.begin(), values.end(), [&](const auto& p) { return p.first == v; });
}

SemigroupSlice value_semigroup_slice(const ValuationProfile& P, const std::vector<long>& degree) {
  std::map<QVector, std::size_t> counts;
  for (const auto& b : standard_monomials(P.chamber().lead_ideal(), degree)) ++counts[P.weighting().apply(b)];
  SemigroupSlice s{degree, {}};
  for (auto& [v, c] : counts) s.values.emplace_back(v, c);
  return s;
}

Polytope newton_okounkov_polytope(const ValuationProfile& P) {
  if (!is_monomial_free(initial_ideal(P.ideal(), P.weighting()).ideal))
    throw DomainError("initial ideal of the weighting contains a monomial");
  const auto& deg = first_grading_row(*P.ring());
  QMatrix pts;
  for (std::size_t j = 0; j < P.ring()->nvars(); ++j) pts.push_back(scaled_column(P.weighting().M, j, deg[j]));
  return Polytope(P.value_dim(), std::move(pts));
}

KhovanskiiResult khovanskii_check(const Ideal& I, const WeightingMatrix& W) {
  const std::size_t n = I.ring()->nvars();
  for (const auto& r : W.M)
    if (r.size() != n) throw DomainError("weighting matrix width differs from the variable count");
  const std::size_t r = rank(W.M, n);
  const std::size_t dim = krull_dimension(I);
  if (r != dim || W.rows() != dim)
    throw DomainError("weighting matrix must have full rank " + std::to_string(dim) + " (Krull dimension), got rank " +
                      std::to_string(r) + " with " + std::to_string(W.rows()) + " rows");
  KhovanskiiResult out;
  out.verdict = prime_verdict(initial_ideal(I, W).ideal, to_integer_rows_exact(W.M));
  out.holds = out.verdict.prime();
  out.certificate = out.verdict.failure();
  return out;
}

MergedPresentation merge_presentations(const Ideal& I, const std::vector<MultiPoly>& new_generators,
                                       const std::vector<std::string>& names) {
  const RingPtr& ring = I.ring();
  const std::size_t n = ring->nvars();
  if (names.size() != new_generators.size()) throw DomainError("one name is needed per new generator");
  Ring::Grading grading = ring->grading();
  for (const auto& g : new_generators) {
    if (!same_ring(g.ring(), ring)) throw DomainError("new generator lives in another ring");
    if (g.is_zero()) throw DomainError("new generator is zero");
    MultidegreeReport d = multidegree(g);
    if (!d.homogeneous) throw DomainError("new generator " + to_string(g) + " is not homogeneous");
    for (std::size_t r = 0; r < grading.size(); ++r) grading[r].push_back(d.degree[r]);
  }
  RingPtr ext = ring->extend(names, grading);
  std::vector<std::size_t> image(n);
  for (std::size_t j = 0; j < n; ++j) image[j] = j;
  std::vector<MultiPoly> gens;
  for (const auto& g : I.generators()) gens.push_back(relabel(g, image, ext));
  MergedPresentation out{Ideal(ext, {}), {}};
  for (std::size_t j = 0; j < n; ++j) out.projection.push_back(MultiPoly::variable(ring, j));
  for (std::size_t k = 0; k < new_generators.size(); ++k) {
    gens.push_back(MultiPoly::variable(ext, n + k) - relabel(new_generators[k], image, ext));
    out.projection.push_back(new_generators[k]);
  }
  out.ideal = Ideal(ext, std::move(gens));
  return out;
}

Polytope bnewton_polytope(const MultiPoly& f, const ValuationProfile& P) {
  MultiPoly nf = normal_form(f, P.chamber());
  if (nf.is_zero()) throw DomainError("polynomial lies in the ideal");
  QMatrix pts;
  for (const auto& [a, c] : nf.terms()) pts.push_back(column_value(P.weighting().M, a));
  return Polytope(P.value_dim(), std::move(pts));
}

Polytope delta_B(const ValuationProfile& P) {
  for (const auto& m : P.chamber().leads())
    if (m.total_degree() == 1) throw DomainError("a variable lies in the chamber's initial ideal");
  const auto& deg = first_grading_row(*P.ring());
  QMatrix pts;
  for (std::size_t j = 0; j < P.ring()->nvars(); ++j) pts.push_back(scaled_column(P.weighting().M, j, deg[j]));
  return Polytope(P.value_dim(), std::move(pts));
}

Polytope project_onto_face(const ValuationProfile& P, const Polytope& delta, const std::vector<std::size_t>& rows) {
  const std::size_t m = P.ring()->grading_rows();
  const QMatrix& M = P.weighting().M;
  const std::size_t n = P.ring()->nvars();
  for (std::size_t i = 0; i < m; ++i)
    if (i >= M.size() || M[i] != to_rational(P.ring()->grading()[i]))
      throw DomainError("weighting matrix does not begin with the grading rows");
  std::vector<std::size_t> sorted = rows;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw DomainError("repeated row index");
  for (std::size_t i = 0; i < m; ++i)
    if (!std::binary_search(sorted.begin(), sorted.end(), i)) throw DomainError("row subset must keep the grading rows");
  QVector w(n, 0);
  for (auto r : sorted) {
    if (r >= M.size()) throw DomainError("row index out of range");
    if (r >= m)
      for (std::size_t j = 0; j < n; ++j) w[j] += M[r][j];
  }
  if (!is_monomial_free(initial_ideal(P.ideal(), w).ideal)) throw DomainError("rows do not span a tropical face");
  return project(delta, rows);
}

Integer degree_from_polytope(const Polytope& P, const ZMatrix& lattice) {
  Rational v = normalized_volume(P, lattice);
  if (v.get_den() != 1) throw DomainError("normalized volume " + v.get_str() + " is not an integer");
  return v.get_num();
}

}  // namespace torideg
