#pragma once

#include <utility>

#include "torideg/valuation.hpp"

namespace torideg {

/// Two profiles on one chamber whose weighting matrices differ only in the
/// last row, with their Newton-Okounkov polytopes over the common projection.
struct WallData {
  ValuationProfile profile1;
  ValuationProfile profile2;
  Polytope delta1;
  Polytope delta2;
  /// Projection of both polytopes forgetting the last coordinate.
  Polytope delta12;
  Rational kappa;

  /// Lower and upper envelope of delta1 / delta2 over a point of delta12.
  Rational phi1(const QVector& v) const;
  Rational psi1(const QVector& v) const;
  Rational phi2(const QVector& v) const;
  Rational psi2(const QVector& v) const;
};

/// Min and max of the last coordinate over the fiber of P above v.
std::pair<Rational, Rational> fiber_bounds(const Polytope& P, const QVector& v);

WallData build_wall(const ValuationProfile& P1, const ValuationProfile& P2);

/// (v, z) -> (v, kappa (z - phi1(v)) + phi2(v)).
QVector shift(const WallData& W, const QVector& point);
/// (v, z) -> (v, kappa (phi1(v) - z) + psi2(v)).
QVector flip(const WallData& W, const QVector& point);
/// M1 b -> M2 b over the standard monomials b of the chamber.
QVector algebraic_wallcross(const WallData& W, const QVector& value);

}  // namespace torideg
