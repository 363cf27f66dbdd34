#pragma once

// Property suites shared by the unit tests and the acceptance binary. Each
// returns how many cases were checked and how many failed.

#include <algorithm>
#include <set>
#include <string>

#include "support.hpp"
#include "torideg/polyhedra.hpp"
#include "torideg/tropical.hpp"
#include "torideg/valuation.hpp"

namespace torideg::test {

struct PropertyReport {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++checked;
    if (!ok && failed++ == 0) first_failure = what;
  }
  bool passed() const { return checked > 0 && failed == 0; }
};

/// Lex comparison under a ZdOrder, as a boolean a <= b.
inline bool value_le(const ZdOrder& order, const QVector& a, const QVector& b) {
  return order.compare(a, b) != Cmp::gt;
}

inline QVector add(const QVector& a, const QVector& b) {
  QVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

/// nu(f + g) <= max(nu f, nu g) and nu(f g) <= nu f + nu g on random
/// homogeneous pairs not in the ideal; with `multiplicative` the product law
/// must hold with equality.
inline PropertyReport quasivaluation_laws(const ValuationProfile& P, std::size_t pairs, std::uint64_t seed,
                                          bool multiplicative) {
  PropertyReport r;
  Gen gen(seed);
  const ZdOrder& order = P.weighting().order;
  MarkedGroebnerBasis G = buchberger(P.ideal(), TermOrder::grevlex());
  while (r.checked < 2 * pairs) {
    long d1 = gen.integer(1, 3), d2 = gen.integer(1, 3);
    MultiPoly f = gen.homogeneous(P.ring(), 3, d1);
    MultiPoly g = gen.homogeneous(P.ring(), 3, d2);
    if (ideal_contains(G, f) || ideal_contains(G, g)) continue;
    QVector vf = quasival_eval(P, f), vg = quasival_eval(P, g);
    QVector vfg = quasival_eval(P, f * g);
    bool prod = multiplicative ? vfg == add(vf, vg) : value_le(order, vfg, add(vf, vg));
    r.record(prod, "product law fails for " + to_string(f) + " and " + to_string(g));
    // Same-degree sums; drop the pair if the sum vanishes in A.
    MultiPoly h = gen.homogeneous(P.ring(), 3, d1);
    MultiPoly s = f + h;
    if (ideal_contains(G, h) || ideal_contains(G, s)) {
      r.record(true, "");
      continue;
    }
    QVector vh = quasival_eval(P, h);
    QVector mx = value_le(order, vf, vh) ? vh : vf;
    r.record(value_le(order, quasival_eval(P, s), mx), "sum law fails for " + to_string(f) + " and " + to_string(h));
  }
  return r;
}

/// For random combinations h = sum c_k m_k g_k of the generators and random
/// weights w, init_w(h) lies in init_w(I).
inline PropertyReport initial_form_membership(const Ideal& I, std::size_t combinations, std::uint64_t seed) {
  PropertyReport r;
  Gen gen(seed);
  const std::size_t n = I.ring()->nvars();
  for (std::size_t k = 0; k < combinations; ++k) {
    QVector w(n);
    for (auto& x : w) x = gen.integer(-3, 5);
    MultiPoly h(I.ring());
    for (const auto& g : I.generators()) {
      if (gen.integer(0, 2) == 0) continue;
      h = h + g.times_monomial(gen.monomial_of_degree(n, gen.integer(0, 2)), gen.nonzero_rational());
    }
    if (h.is_zero()) h = I.generators().front();
    InitialIdeal J = initial_ideal(I, w);
    MarkedGroebnerBasis B = buchberger(J.ideal, TermOrder::grevlex());
    r.record(ideal_contains(B, initial_form(h, w)), "init_" + to_string(w) + " of " + to_string(h));
  }
  return r;
}

/// Cross product sign of (b - a) x (c - a).
inline Rational cross(const QVector& a, const QVector& b, const QVector& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

/// Extreme points of a planar point set by Andrew's monotone chain;
/// collinear boundary points are not extreme.
inline std::set<QVector> planar_extreme_points(const QMatrix& pts) {
  std::set<QVector> distinct(pts.begin(), pts.end());
  std::vector<QVector> p(distinct.begin(), distinct.end());
  if (p.size() <= 2) return distinct;
  std::vector<QVector> hull(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], p[i]) <= 0) --k;
    hull[k++] = p[i];
  }
  return std::set<QVector>(hull.begin(), hull.begin() + static_cast<long>(k));
}

/// convex_hull vertices equal the monotone-chain extreme points, and every
/// input point has a valid barycentric certificate.
inline PropertyReport hull_certificates(std::size_t sets, std::uint64_t seed) {
  PropertyReport r;
  Gen gen(seed);
  for (std::size_t s = 0; s < sets; ++s) {
    QMatrix pts;
    std::size_t count = static_cast<std::size_t>(gen.integer(1, 12));
    for (std::size_t k = 0; k < count; ++k) pts.push_back({gen.integer(-4, 4), gen.integer(-4, 4)});
    Polytope P = convex_hull(pts);
    std::set<QVector> oracle = planar_extreme_points(pts);
    std::set<QVector> got(P.vertices().begin(), P.vertices().end());
    r.record(got == oracle, "hull of set " + std::to_string(s) + " disagrees with the monotone chain");
    for (const auto& p : pts) {
      auto w = P.convex_certificate(p);
      bool ok = w.has_value() && w->size() == P.vertices().size();
      if (ok) {
        QVector sum(2, 0);
        Rational total = 0;
        for (std::size_t k = 0; k < w->size(); ++k) {
          ok = ok && (*w)[k] >= 0;
          total += (*w)[k];
          for (std::size_t j = 0; j < 2; ++j) sum[j] += (*w)[k] * P.vertices()[k][j];
        }
        ok = ok && total == 1 && sum == p;
      }
      r.record(ok, "no certificate for " + to_string(p) + " in set " + std::to_string(s));
    }
  }
  return r;
}

/// Every facet of every maximal cone is shared with exactly one neighbour,
/// adjacency is symmetric, and crossing a shared facet from either side
/// reaches the other cone.
inline PropertyReport gfan_flip_symmetry(const Ideal& I) {
  PropertyReport r;
  GroebnerFan F = gfan_traverse(I);
  const std::size_t n = I.ring()->nvars();
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (auto [a, b] : F.adjacency) edges.insert({std::min(a, b), std::max(a, b)});
  r.record(edges.size() == F.adjacency.size(), "duplicate adjacency edges");
  for (std::size_t a = 0; a < F.cones.size(); ++a) {
    const Cone& A = F.cones[a];
    for (const auto& normal : A.facet_normals()) {
      Cone facet = A.face(normal);
      QVector u = facet.relative_interior_point();
      std::size_t owners = 0, neighbour = a;
      for (std::size_t b = 0; b < F.cones.size(); ++b) {
        if (b == a) continue;
        if (F.cones[b].contains(u)) {
          ++owners;
          neighbour = b;
        }
      }
      r.record(owners == 1, "facet " + to_string(u) + " of cone " + std::to_string(a) + " has " +
                                std::to_string(owners) + " neighbours");
      if (owners != 1) continue;
      r.record(edges.count({std::min(a, neighbour), std::max(a, neighbour)}) == 1,
               "cones " + std::to_string(a) + " and " + std::to_string(neighbour) + " are not marked adjacent");
      // Step off the facet to either side, close enough to stay in the
      // neighbouring open cone, and compare the monomial initial ideals.
      auto step = [&](const Cone& target, const Rational& sign) {
        Rational eps = 1;
        QVector p(n);
        for (int tries = 0; tries < 64; ++tries, eps /= 2) {
          for (std::size_t j = 0; j < n; ++j) p[j] = u[j] + sign * eps * normal[j];
          if (target.contains_in_relative_interior(p)) break;
        }
        return buchberger(I, refine(p, TermOrder::grevlex()));
      };
      MarkedGroebnerBasis across = step(F.cones[neighbour], -1);
      MarkedGroebnerBasis back = step(A, 1);
      r.record(same_ideal(across.lead_ideal(), F.bases[neighbour].lead_ideal()),
               "flip out of cone " + std::to_string(a) + " misses cone " + std::to_string(neighbour));
      r.record(same_ideal(back.lead_ideal(), F.bases[a].lead_ideal()),
               "flip back into cone " + std::to_string(a) + " fails");
    }
  }
  return r;
}

/// NF(NF(f)) = NF(f), f - NF(f) lies in I, and no term of NF(f) is divisible by a lead.
inline PropertyReport normal_form_idempotence(const Ideal& I, std::size_t samples, std::uint64_t seed) {
  PropertyReport r;
  Gen gen(seed);
  for (const TermOrder& order : {TermOrder::grevlex(), TermOrder::lex()}) {
    MarkedGroebnerBasis G = buchberger(I, order);
    for (std::size_t k = 0; k < samples; ++k) {
      MultiPoly f = gen.polynomial(I.ring(), 5, 5);
      MultiPoly nf = normal_form(f, G);
      r.record(normal_form(nf, G) == nf, "normal form not idempotent on " + to_string(f));
      r.record(ideal_contains(G, f - nf), "f - NF(f) not in the ideal for " + to_string(f));
      bool standard = true;
      for (const auto& [m, c] : nf.terms())
        for (const auto& l : G.leads()) standard = standard && !l.divides(m);
      r.record(standard, "normal form of " + to_string(f) + " has a reducible term");
    }
  }
  return r;
}

}  // namespace torideg::test
