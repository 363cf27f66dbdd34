#include "torideg/degeneration.hpp"

#include <algorithm>
#include <set>

#include "torideg/error.hpp"
#include "torideg/linalg.hpp"
#include "torideg/lp.hpp"

namespace torideg {

namespace {

long to_long(const Integer& z, const char* what) {
  if (!z.fits_slong_p()) throw LimitError(std::string(what) + " too large");
  return z.get_si();
}

}  // namespace

RingPtr lifted_ring(const RingPtr& ring, const ZMatrix& M, const std::string& prefix) {
  const std::size_t n = ring->nvars();
  const std::size_t k = M.size();
  Ring::Grading grading;
  for (const auto& row : ring->grading()) {
    auto r = row;
    r.resize(n + k, 0);
    grading.push_back(std::move(r));
  }
  const auto& pw = ring->positive_weight();
  for (std::size_t i = 0; i < k; ++i) {
    if (M[i].size() != n) throw DomainError("ray matrix width differs from the variable count");
    long shift = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (M[i][j] < 0) shift = std::max(shift, to_long((-M[i][j] + pw[j] - 1) / pw[j], "ray entry"));
    std::vector<long> row(n + k, 0);
    for (std::size_t j = 0; j < n; ++j) row[j] = to_long(M[i][j], "ray entry") + shift * pw[j];
    row[n + i] = 1;
    grading.push_back(std::move(row));
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(prefix + std::to_string(i + 1));
  return ring->extend(names, grading);
}

MultiPoly lift_poly(const MultiPoly& f, const ZMatrix& M, const RingPtr& target) {
  if (f.is_zero()) throw DomainError("cannot lift the zero polynomial");
  const std::size_t n = f.ring()->nvars();
  const std::size_t k = M.size();
  if (target->nvars() != n + k) throw DomainError("lift target needs one extra variable per ray");
  std::vector<std::vector<Integer>> values;
  std::vector<Integer> mu(k);
  bool first = true;
  for (const auto& [a, c] : f.terms()) {
    std::vector<Integer> v(k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (M[i].size() != n) throw DomainError("ray matrix width differs from the variable count");
      for (std::size_t j = 0; j < n; ++j) v[i] += M[i][j] * a[j];
      if (first || v[i] > mu[i]) mu[i] = v[i];
    }
    first = false;
    values.push_back(std::move(v));
  }
  std::vector<MultiPoly::Term> terms;
  std::size_t idx = 0;
  for (const auto& [a, c] : f.terms()) {
    std::vector<Exponent> e(a.exponents().begin(), a.exponents().end());
    e.resize(n + k, 0);
    for (std::size_t i = 0; i < k; ++i) {
      Integer d = mu[i] - values[idx][i];
      if (!d.fits_sint_p()) throw LimitError("lift exponent too large");
      e[n + i] = static_cast<Exponent>(d.get_si());
    }
    terms.emplace_back(Monomial(std::move(e)), c);
    ++idx;
  }
  return MultiPoly::from_terms(target, std::move(terms));
}

MultiPoly lift_poly(const MultiPoly& f, const ZMatrix& M) { return lift_poly(f, M, lifted_ring(f.ring(), M)); }

LiftedIdeal lift_ideal(const Ideal& I, const MarkedGroebnerBasis& chamber, const ZMatrix& M) {
  if (!same_ring(I.ring(), chamber.ring())) throw DomainError("chamber basis lives in another ring");
  RingPtr ext = lifted_ring(I.ring(), M);
  std::vector<MultiPoly> gens;
  for (const auto& g : chamber.elements()) gens.push_back(lift_poly(g, M, ext));
  TermOrder order = TermOrder::block(I.ring()->nvars(), chamber.order(), TermOrder::lex());
  return LiftedIdeal{I, chamber, M, ext, std::move(gens), std::move(order)};
}

QVector face_point(const ZMatrix& chamber_rays, const QMatrix& lineality, const ZMatrix& tau_rays) {
  if (chamber_rays.empty()) return {};
  const std::size_t n = chamber_rays[0].size();
  QMatrix rays;
  for (const auto& r : chamber_rays) rays.push_back(to_rational(r));
  Cone C = Cone::from_generators(n, rays, lineality);
  QMatrix tau;
  QVector w(n, 0);
  for (const auto& r : tau_rays) {
    QVector q = to_rational(r);
    if (!C.contains(q)) throw DomainError("ray " + to_string(q) + " lies outside the chamber cone");
    for (std::size_t j = 0; j < n; ++j) w[j] += q[j];
    tau.push_back(std::move(q));
  }
  Cone F = C.face_containing(w);
  Cone T = Cone::from_generators(n, tau, lineality);
  QVector point;
  for (const auto& r : rays) {
    bool in_face = F.contains(r);
    if (in_face && !T.contains(r)) throw DomainError("the given rays do not span a face of the chamber cone");
    point.push_back(in_face ? 0 : 1);
  }
  return point;
}

Ideal fiber(const LiftedIdeal& L, const QVector& a) {
  const std::size_t n = L.base_ideal.ring()->nvars();
  if (a.size() != L.M.size()) throw DomainError("fiber point needs one coordinate per ray");
  std::vector<std::size_t> vars(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) vars[i] = n + i;
  std::vector<MultiPoly> gens;
  for (const auto& g : L.generators) {
    MultiPoly s = substitute(g, vars, a, L.base_ideal.ring());
    if (!s.is_zero()) gens.push_back(std::move(s));
  }
  return Ideal(L.base_ideal.ring(), std::move(gens));
}

std::size_t hilbert_slice(const Ideal& J, const std::vector<long>& degree) {
  if (!J.is_homogeneous()) throw DomainError("Hilbert slices need a homogeneous ideal");
  MarkedGroebnerBasis G = buchberger(J, TermOrder::grevlex());
  return standard_monomials(G.lead_ideal(), degree).size();
}

ZVector order_preserving_projection(const QMatrix& F, const ZdOrder& order) {
  if (F.empty()) throw DomainError("empty point set");
  const std::size_t d = F[0].size();
  std::vector<QVector> pts(F.begin(), F.end());
  for (const auto& p : pts)
    if (p.size() != d) throw DomainError("points of different dimensions");
  std::sort(pts.begin(), pts.end(), [&](const QVector& a, const QVector& b) { return order.compare(a, b) == Cmp::lt; });
  LinearProgram lp(d);
  lp.nonneg.assign(d, true);
  lp.objective.assign(d, 1);
  for (std::size_t i = 0; i < d; ++i) {
    QVector e(d, 0);
    e[i] = 1;
    lp.add(std::move(e), LinearProgram::Rel::ge, 1);
  }
  for (std::size_t k = 1; k < pts.size(); ++k) {
    if (order.compare(pts[k - 1], pts[k]) == Cmp::eq) continue;
    QVector diff(d);
    for (std::size_t i = 0; i < d; ++i) diff[i] = pts[k][i] - pts[k - 1][i];
    lp.add(std::move(diff), LinearProgram::Rel::ge, 1);
  }
  LpResult r = solve_lp(lp);
  if (!r.optimal()) throw DomainError("no positive projection preserves the order on the given points");
  return primitive(r.x);
}

ReesFamily rees_one_parameter(const ValuationProfile& P) {
  const WeightingMatrix& W = P.weighting();
  const std::size_t n = P.ring()->nvars();
  // The family must degenerate to init_M, so use the basis for the refined order.
  MarkedGroebnerBasis G = buchberger(P.ideal(), refine(W, TermOrder::grevlex()));
  std::set<QVector> values;
  for (const auto& g : G.elements())
    for (const auto& [a, c] : g.terms()) values.insert(W.apply(a));
  ZVector e = order_preserving_projection(QMatrix(values.begin(), values.end()), W.order);
  QVector w(n, 0);
  for (std::size_t i = 0; i < W.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) w[j] += Rational(e[i]) * W.M[i][j];
  ZVector weight = primitive(w);
  return ReesFamily{homogenize(P.ideal(), weight), std::move(e), std::move(weight)};
}

}  // namespace torideg
