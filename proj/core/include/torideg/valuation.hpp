#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torideg/groebner.hpp"
#include "torideg/polyhedra.hpp"
#include "torideg/tropical.hpp"

namespace torideg {

/// Quasivaluation nu_M on A = S/I, evaluated through the standard monomials
/// of a fixed Gröbner chamber.
class ValuationProfile {
 public:
  /// The chamber is the reduced basis for the order (sum of rows of M, tie),
  /// which contains every row of M; this is checked.
  ValuationProfile(Ideal I, WeightingMatrix W, const TermOrder& chamber_tie = TermOrder::grevlex());
  ValuationProfile(Ideal I, WeightingMatrix W, MarkedGroebnerBasis chamber);

  const Ideal& ideal() const { return ideal_; }
  const WeightingMatrix& weighting() const { return weighting_; }
  const MarkedGroebnerBasis& chamber() const { return chamber_; }
  const RingPtr& ring() const { return ideal_.ring(); }
  std::size_t value_dim() const { return weighting_.rows(); }

  /// M as integer rows (rows scaled to be primitive if not integral).
  ZMatrix integer_matrix() const;
  /// Toric certificate of init_M(I), computed once.
  const PrimeVerdict& verdict() const;

 private:
  void check_chamber() const;

  Ideal ideal_;
  WeightingMatrix weighting_;
  MarkedGroebnerBasis chamber_;
  mutable std::optional<PrimeVerdict> verdict_;
};

/// Max under the weighting order of M.b over the standard-monomial support of f.
QVector quasival_eval(const ValuationProfile& P, const MultiPoly& f);

/// Expression p in the ring's variables with p(xbar_1, ..., xbar_n) = f in A.
MultiPoly subduction(const MultiPoly& f, const ValuationProfile& P);

/// Subduction in an ambient polynomial ring B with the monomial valuation
/// given by `order` (largest term wins): writes f as a polynomial in
/// `images`, returned in `target` whose j-th variable stands for images[j].
MultiPoly subduction(const MultiPoly& f, const std::vector<MultiPoly>& images, const TermOrder& order,
                     const RingPtr& target);

struct SemigroupSlice {
  std::vector<long> degree;
  /// Distinct values with the number of standard monomials attaining them.
  std::vector<std::pair<QVector, std::size_t>> values;
  bool contains(const QVector& v) const;
};

SemigroupSlice value_semigroup_slice(const ValuationProfile& P, const std::vector<long>& degree);

/// conv(column_j(M) / deg(x_j)) with deg taken in the first grading row.
Polytope newton_okounkov_polytope(const ValuationProfile& P);

struct KhovanskiiResult {
  bool holds = false;
  PrimeVerdict verdict;
  /// Failing sub-verdict, empty when the variables form a Khovanskii basis.
  std::string certificate;
};

/// The variables form a Khovanskii basis for nu_M iff init_M(I) is the toric
/// ideal of the columns of M. W must have rank equal to the Krull dimension.
KhovanskiiResult khovanskii_check(const Ideal& I, const WeightingMatrix& W);

struct MergedPresentation {
  Ideal ideal;
  /// Image of every variable of the enlarged ring in the old ring.
  std::vector<MultiPoly> projection;
};

/// Presentation of A on the old variables plus one new variable per given
/// homogeneous element. New variables are named by `names`.
MergedPresentation merge_presentations(const Ideal& I, const std::vector<MultiPoly>& new_generators,
                                       const std::vector<std::string>& names);

/// conv(M_C a) over the standard-monomial support of f.
Polytope bnewton_polytope(const MultiPoly& f, const ValuationProfile& P);

/// conv((1 / deg x_j) M_C e_j); requires that no variable lies in init_C(I).
Polytope delta_B(const ValuationProfile& P);

/// Projection of Delta_B onto the listed rows. The rows must contain the
/// grading rows and their remaining rows must span a tropical face.
Polytope project_onto_face(const ValuationProfile& P, const Polytope& delta, const std::vector<std::size_t>& rows);

/// Normalized volume in the lattice generated by `lattice`.
Integer degree_from_polytope(const Polytope& P, const ZMatrix& lattice);

}  // namespace torideg
