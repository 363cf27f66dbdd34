#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "torideg/groebner.hpp"
#include "torideg/linalg.hpp"

namespace torideg {

/// V-representation of a cone: nonnegative span of rays plus span of lines.
struct ConeGenerators {
  QMatrix rays;
  QMatrix lines;
};

/// Generators of {x : A x >= 0, E x = 0} by the double description method.
ConeGenerators double_description(const QMatrix& inequalities, const QMatrix& equalities, std::size_t n);

/// Polyhedral cone {w : v.w >= 0 for v in inequalities, e.w = 0 for e in equalities}.
class Cone {
 public:
  Cone(std::size_t ambient_dim, QMatrix inequalities, QMatrix equalities = {});
  /// Cone spanned by rays and lines; the H-representation is the dual hull.
  static Cone from_generators(std::size_t ambient_dim, const QMatrix& rays, const QMatrix& lines = {});

  std::size_t ambient_dim() const { return n_; }
  const QMatrix& inequalities() const { return ineqs_; }
  const QMatrix& equalities() const { return eqs_; }

  bool contains(const QVector& w) const;
  /// All inequalities that are not implicit equalities hold strictly.
  bool contains_in_relative_interior(const QVector& w) const;
  std::size_t dimension() const;
  /// Basis of the linear hull.
  QMatrix linear_span() const;
  /// Basis of the largest linear subspace contained in the cone.
  QMatrix lineality() const;
  QVector relative_interior_point() const;
  /// Primitive facet normals, one per facet, modulo the linear-hull equations.
  QMatrix facet_normals() const;
  /// The face {w in C : v.w = 0} for a valid inequality v.
  Cone face(const QVector& v) const;
  /// Smallest face containing w (w must lie in the cone).
  Cone face_containing(const QVector& w) const;
  const ConeGenerators& generators() const;

 private:
  void analyze() const;

  std::size_t n_;
  QMatrix ineqs_;
  QMatrix eqs_;
  mutable bool analyzed_ = false;
  mutable std::vector<bool> implicit_;
  mutable QVector interior_;
  mutable std::optional<ConeGenerators> gens_;
};

/// Collection of cones sharing a lineality space, with facet adjacency.
struct Fan {
  std::vector<Cone> cones;
  QMatrix lineality;
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;
};

/// {w : w.(lead(g) - a) >= 0 for all g in G and tail exponents a}.
Cone groebner_cone(const MarkedGroebnerBasis& G);

/// Basis of the lineality space {w : init_w(I) = I} of a homogeneous ideal,
/// grading rows first. Verified by init_w(I) = I on every basis vector.
QMatrix lineality_space(const Ideal& I);

/// Primitive integer representatives of the extreme rays of C / span(L).
/// Each ray is reduced modulo L in row-echelon form, made primitive and, if
/// `shift` is given, moved by the least nonnegative multiple of it that makes
/// all entries nonnegative. Sorted in decreasing lex order.
std::vector<ZVector> rays_mod_lineality(const Cone& C, const QMatrix& L, const std::optional<QVector>& shift = {});

/// Convex polytope given by its vertices.
class Polytope {
 public:
  /// Facet inequality c0 + c.x >= 0 (or equation c0 + c.x = 0).
  struct Halfspace {
    Rational c0;
    QVector c;
  };

  Polytope(std::size_t ambient_dim, QMatrix vertices);

  std::size_t ambient_dim() const { return n_; }
  const QMatrix& vertices() const { return vertices_; }
  std::size_t affine_dimension() const;
  /// Facets and affine-hull equations from the dual double description.
  const std::vector<Halfspace>& facets() const;
  const std::vector<Halfspace>& equations() const;
  bool contains(const QVector& p) const;
  /// Barycentric weights of p over the vertices, if p lies in the polytope.
  std::optional<QVector> convex_certificate(const QVector& p) const;

  friend bool operator==(const Polytope& a, const Polytope& b) { return a.vertices_ == b.vertices_; }

 private:
  Polytope(std::size_t ambient_dim, QMatrix vertices, bool trusted);
  void compute_facets() const;

  std::size_t n_;
  QMatrix vertices_;
  mutable std::optional<std::pair<std::vector<Halfspace>, std::vector<Halfspace>>> hrep_;
};

/// Irredundant vertex set, sorted lexicographically.
Polytope convex_hull(const QMatrix& points);

struct LpExtreme {
  Rational value;
  QVector witness;
};
LpExtreme lp_extreme(const Polytope& P, const QVector& c, bool maximize);

/// Coordinate projection keeping the listed coordinates.
Polytope project(const Polytope& P, const std::vector<std::size_t>& coords);

/// Simplices (vertex index tuples) of a triangulation of P.
std::vector<std::vector<std::size_t>> triangulate(const Polytope& P);

/// q! vol(P) measured in the lattice L ∩ (direction space of aff P), where
/// L is spanned by the integer vectors `lattice` (default Z^n).
Rational normalized_volume(const Polytope& P, const std::optional<ZMatrix>& lattice = {});

/// Basis of L ∩ D for the lattice spanned by `lattice` and the subspace D.
ZMatrix lattice_in_subspace(const ZMatrix& lattice, const QMatrix& subspace, std::size_t n);

}  // namespace torideg
