#include "torideg/wallcross.hpp"

#include <set>

#include "torideg/error.hpp"
#include "torideg/lp.hpp"

namespace torideg {

namespace {

QVector prefix(const QVector& p) { return QVector(p.begin(), p.end() - 1); }

Polytope drop_last(const Polytope& P) {
  std::vector<std::size_t> coords(P.ambient_dim() - 1);
  for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = i;
  return project(P, coords);
}

}  // namespace

std::pair<Rational, Rational> fiber_bounds(const Polytope& P, const QVector& v) {
  const std::size_t d = P.ambient_dim();
  if (v.size() + 1 != d) throw DomainError("fiber base point has the wrong dimension");
  const QMatrix& V = P.vertices();
  LinearProgram lp(V.size());
  lp.nonneg.assign(V.size(), true);
  for (std::size_t i = 0; i + 1 < d; ++i) {
    QVector row(V.size());
    for (std::size_t k = 0; k < V.size(); ++k) row[k] = V[k][i];
    lp.add(std::move(row), LinearProgram::Rel::eq, v[i]);
  }
  lp.add(QVector(V.size(), 1), LinearProgram::Rel::eq, 1);
  for (std::size_t k = 0; k < V.size(); ++k) lp.objective[k] = V[k][d - 1];
  lp.maximize = false;
  LpResult lo = solve_lp(lp);
  if (!lo.optimal()) throw DomainError("point " + to_string(v) + " is not below the polytope");
  lp.maximize = true;
  LpResult hi = solve_lp(lp);
  return {lo.value, hi.value};
}

Rational WallData::phi1(const QVector& v) const { return fiber_bounds(delta1, v).first; }
Rational WallData::psi1(const QVector& v) const { return fiber_bounds(delta1, v).second; }
Rational WallData::phi2(const QVector& v) const { return fiber_bounds(delta2, v).first; }
Rational WallData::psi2(const QVector& v) const { return fiber_bounds(delta2, v).second; }

WallData build_wall(const ValuationProfile& P1, const ValuationProfile& P2) {
  const QMatrix& M1 = P1.weighting().M;
  const QMatrix& M2 = P2.weighting().M;
  if (M1.size() != M2.size() || M1.size() < 2) throw DomainError("wall profiles need the same number (>= 2) of rows");
  for (std::size_t i = 0; i + 1 < M1.size(); ++i)
    if (M1[i] != M2[i]) throw DomainError("wall profiles differ in row " + std::to_string(i) + ", not only the last");
  if (!same_ring(P1.ring(), P2.ring()) || P1.chamber().leads() != P2.chamber().leads())
    throw DomainError("wall profiles do not share a chamber");
  if (!same_ideal(P1.ideal(), P2.ideal())) throw DomainError("wall profiles present different ideals");

  Polytope d1 = newton_okounkov_polytope(P1);
  Polytope d2 = newton_okounkov_polytope(P2);
  Polytope d12 = drop_last(d1);
  if (!(d12 == drop_last(d2))) throw DomainError("the two polytopes have different projections");

  auto length = [](const Polytope& P, const QVector& v) -> Rational {
    auto [lo, hi] = fiber_bounds(P, v);
    return hi - lo;
  };
  QVector centre(d12.ambient_dim(), 0);
  for (const auto& v : d12.vertices())
    for (std::size_t i = 0; i < centre.size(); ++i) centre[i] += v[i] / static_cast<long>(d12.vertices().size());
  Rational l1 = length(d1, centre), l2 = length(d2, centre);
  Rational kappa;
  if (l1 == 0 && l2 == 0) {
    kappa = 1;
  } else if (l1 == 0 || l2 == 0) {
    throw DomainError("one fiber is a point and the other is not, so no positive constant exists");
  } else {
    kappa = l2 / l1;
  }
  for (const auto& v : d12.vertices())
    if (kappa * length(d1, v) != length(d2, v))
      throw DomainError("fiber-length ratio is not constant: " + kappa.get_str() + " at " + to_string(centre) +
                        " but not at vertex " + to_string(v));
  return WallData{P1, P2, std::move(d1), std::move(d2), std::move(d12), kappa};
}

QVector shift(const WallData& W, const QVector& point) {
  if (!W.delta1.contains(point)) throw DomainError("point " + to_string(point) + " lies outside the first polytope");
  QVector v = prefix(point);
  QVector out = v;
  out.push_back(W.kappa * (point.back() - W.phi1(v)) + W.phi2(v));
  return out;
}

QVector flip(const WallData& W, const QVector& point) {
  if (!W.delta1.contains(point)) throw DomainError("point " + to_string(point) + " lies outside the first polytope");
  QVector v = prefix(point);
  QVector out = v;
  out.push_back(W.kappa * (W.phi1(v) - point.back()) + W.psi2(v));
  return out;
}

QVector algebraic_wallcross(const WallData& W, const QVector& value) {
  const RingPtr& ring = W.profile1.ring();
  const std::size_t m = ring->grading_rows();
  if (value.size() != W.profile1.value_dim()) throw DomainError("value has the wrong dimension");
  std::vector<long> degree;
  for (std::size_t i = 0; i < m; ++i) {
    if (W.profile1.weighting().M[i] != to_rational(ring->grading()[i]))
      throw DomainError("weighting matrix does not begin with the grading rows");
    if (value[i].get_den() != 1 || !value[i].get_num().fits_slong_p()) throw DomainError("value has a fractional degree");
    degree.push_back(value[i].get_num().get_si());
  }
  std::set<QVector> images;
  for (const auto& b : standard_monomials(W.profile1.chamber().lead_ideal(), degree))
    if (W.profile1.weighting().apply(b) == value) images.insert(W.profile2.weighting().apply(b));
  if (images.empty()) throw DomainError("value " + to_string(value) + " is not in the value semigroup");
  if (images.size() > 1) throw DomainError("basis monomials of value " + to_string(value) + " have different images");
  return *images.begin();
}

}  // namespace torideg
