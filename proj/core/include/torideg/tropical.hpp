#pragma once

#include <string>
#include <vector>

#include "torideg/groebner.hpp"
#include "torideg/polyhedra.hpp"

namespace torideg {

/// Maximal cones of the Gröbner fan, each with the reduced basis that certifies it.
struct GroebnerFan {
  Ideal ideal;
  QMatrix lineality;
  std::vector<MarkedGroebnerBasis> bases;
  std::vector<Cone> cones;
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;

  Fan fan() const { return Fan{cones, lineality, adjacency}; }
};

/// Dimension ceiling (modulo lineality) for fan traversal and face enumeration.
inline constexpr std::size_t kFanDimensionCeiling = 10;

/// Traverses the Gröbner fan of a homogeneous ideal by facet flips from the
/// grevlex cone. Flipping across facet normal v at facet point u uses the
/// order (u, -v, grevlex), whose cone is the neighbour across that facet.
GroebnerFan gfan_traverse(const Ideal& I, std::size_t ceiling = kFanDimensionCeiling);

/// True iff J contains no monomial, i.e. J : (x_1...x_n)^infinity is proper.
bool is_monomial_free(const Ideal& J);

/// Kernel of x_j -> z^(M e_j) as an ideal of `ring` (default x1..xn, standard grading).
Ideal toric_ideal(const ZMatrix& M, RingPtr ring = nullptr);

/// True iff b is the image of a under some rescaling x_j -> lambda_j x_j with
/// lambda_j nonzero over an algebraically closed field. Both ideals are
/// compared through their reduced grevlex bases.
bool equal_up_to_rescaling(const Ideal& a, const Ideal& b);

/// Sub-verdicts of the toric primality test for an initial ideal J against
/// the columns of M.
struct PrimeVerdict {
  bool monomial_free = false;
  bool binomial = false;
  bool toric = false;
  bool prime() const { return monomial_free && binomial && toric; }
  /// Description of the first failing sub-verdict, empty when prime.
  std::string failure() const;
};
PrimeVerdict prime_verdict(const Ideal& J, const ZMatrix& M, bool check_toric = true);

struct TropicalCone {
  Cone cone;
  Ideal initial_ideal;
  /// Lineality rows (grading rows first), then primitive ray representatives.
  ZMatrix ray_matrix;
  std::size_t lineality_rows = 0;
  std::size_t dimension = 0;
  bool monomial_free = false;
  bool binomial = false;
  bool toric = false;
  bool prime = false;
};

/// Certifies the cone spanned by the rows of M (the first `lineality_rows`
/// rows as lines, the rest as rays). The initial ideal is taken at the sum of
/// the rays; the cone must be the face of the Gröbner cone containing that
/// point. Primality means monomial-free, binomial, and equal to the toric
/// ideal of the columns of M up to rescaling of variables. With
/// `check_toric` false only the first two verdicts are computed.
TropicalCone certify_prime_cone(const Ideal& I, const ZMatrix& M, std::size_t lineality_rows,
                                bool check_toric = true);

/// Cones of trop(I): faces of Gröbner cones whose initial ideal is
/// monomial-free. By default only the maximal ones are returned.
std::vector<TropicalCone> tropicalize(const Ideal& I, bool include_faces = false,
                                      std::size_t ceiling = kFanDimensionCeiling);

/// Canonical text of the reduced grevlex basis; equal keys mean equal ideals.
std::string ideal_key(const Ideal& I);

}  // namespace torideg
