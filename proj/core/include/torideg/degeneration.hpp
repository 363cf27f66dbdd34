#pragma once

#include <string>
#include <vector>

#include "torideg/groebner.hpp"
#include "torideg/polyhedra.hpp"
#include "torideg/valuation.hpp"

namespace torideg {

/// k[x, t_1..t_k] for k = rows of M. Old grading rows are padded with zeros;
/// row i of M (shifted by a multiple of the positive weight to be
/// nonnegative) grades x, and t_i has degree 1 in it.
RingPtr lifted_ring(const RingPtr& ring, const ZMatrix& M, const std::string& prefix = "t");

/// sum c_a x^a t^(mu - M a) with mu the rowwise maximum of M a over supp(f).
MultiPoly lift_poly(const MultiPoly& f, const ZMatrix& M, const RingPtr& target);
MultiPoly lift_poly(const MultiPoly& f, const ZMatrix& M);

struct LiftedIdeal {
  Ideal base_ideal;
  MarkedGroebnerBasis chamber;
  /// Chamber rays without lineality rows.
  ZMatrix M;
  RingPtr ring;
  std::vector<MultiPoly> generators;
  /// Chamber order on x, ties broken by lex on t.
  TermOrder order;

  Ideal ideal() const { return Ideal(ring, generators); }
};

LiftedIdeal lift_ideal(const Ideal& I, const MarkedGroebnerBasis& chamber, const ZMatrix& M);

/// 0 on the chamber rays lying in tau, 1 on the others. tau is spanned by
/// `tau_rays` together with the lineality space and must be a face of the
/// chamber cone spanned by `chamber_rays` and the lineality space.
QVector face_point(const ZMatrix& chamber_rays, const QMatrix& lineality, const ZMatrix& tau_rays);

/// Substitutes t = a in every lifted generator; zero results are dropped.
Ideal fiber(const LiftedIdeal& L, const QVector& a);

/// dim_k (S/J)_degree for a homogeneous ideal J.
std::size_t hilbert_slice(const Ideal& J, const std::vector<long>& degree);

/// Positive integer e with e.m < e.n whenever m < n in F under `order`.
ZVector order_preserving_projection(const QMatrix& F, const ZdOrder& order);

struct ReesFamily {
  Ideal ideal;
  ZVector e;
  /// The composite weight e.M on the variables.
  ZVector weight;
};

/// One-parameter family homogenize(I, e.M), where e separates the values of
/// the chamber basis terms under the profile's order.
ReesFamily rees_one_parameter(const ValuationProfile& P);

}  // namespace torideg
