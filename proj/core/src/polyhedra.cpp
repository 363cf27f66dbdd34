#include "torideg/polyhedra.hpp"

#include <algorithm>
#include <set>

#include "torideg/error.hpp"
#include "torideg/lp.hpp"

namespace torideg {

namespace {

using Bits = std::vector<std::uint64_t>;

void set_bit(Bits& b, std::size_t k) { b[k / 64] |= std::uint64_t{1} << (k % 64); }

bool superset(const Bits& big, const Bits& small) {
  for (std::size_t i = 0; i < big.size(); ++i)
    if ((small[i] & ~big[i]) != 0) return false;
  return true;
}

QVector normalized(const QVector& v) { return to_rational(primitive(v)); }

bool is_zero(const QVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

QMatrix dedupe_rows(const QMatrix& rows) {
  std::set<ZVector> seen;
  QMatrix out;
  for (const auto& r : rows) {
    if (is_zero(r)) continue;
    ZVector p = primitive(r);
    if (seen.insert(p).second) out.push_back(to_rational(p));
  }
  return out;
}

QMatrix identity(std::size_t n) {
  QMatrix I(n, QVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) I[i][i] = 1;
  return I;
}

}  // namespace

ConeGenerators double_description(const QMatrix& A_in, const QMatrix& E, std::size_t n) {
  const QMatrix A = dedupe_rows(A_in);
  QMatrix lines = E.empty() ? identity(n) : nullspace(E, n);
  struct Ray {
    QVector v;
    Bits zero;
  };
  const std::size_t words = (A.size() + 63) / 64 + 1;
  std::vector<Ray> rays;

  for (std::size_t k = 0; k < A.size(); ++k) {
    const QVector& a = A[k];
    std::size_t piv = lines.size();
    Rational a0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      a0 = dot(a, lines[i]);
      if (a0 != 0) {
        piv = i;
        break;
      }
    }
    if (piv < lines.size()) {
      // A line leaves the lineality space and becomes a ray.
      QVector l0 = lines[piv];
      lines.erase(lines.begin() + static_cast<long>(piv));
      for (auto& l : lines) {
        Rational al = dot(a, l);
        if (al == 0) continue;
        Rational f = al / a0;
        for (std::size_t j = 0; j < n; ++j) l[j] -= f * l0[j];
        l = normalized(l);
      }
      for (auto& r : rays) {
        Rational ar = dot(a, r.v);
        if (ar != 0) {
          Rational f = ar / a0;
          for (std::size_t j = 0; j < n; ++j) r.v[j] -= f * l0[j];
          r.v = normalized(r.v);
        }
        set_bit(r.zero, k);
      }
      if (a0 < 0)
        for (auto& x : l0) x = -x;
      Ray nr{normalized(l0), Bits(words, 0)};
      for (std::size_t i = 0; i < k; ++i) set_bit(nr.zero, i);
      rays.push_back(std::move(nr));
      continue;
    }
    std::vector<Rational> val(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<Ray> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0) pos.push_back(i);
      if (val[i] < 0) neg.push_back(i);
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      if (val[i] < 0) continue;
      Ray r = rays[i];
      if (val[i] == 0) set_bit(r.zero, k);
      next.push_back(std::move(r));
    }
    for (std::size_t p : pos)
      for (std::size_t q : neg) {
        Bits common(words);
        for (std::size_t w = 0; w < words; ++w) common[w] = rays[p].zero[w] & rays[q].zero[w];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r)
          if (r != p && r != q && superset(rays[r].zero, common)) adjacent = false;
        if (!adjacent) continue;
        QVector v(n);
        for (std::size_t j = 0; j < n; ++j) v[j] = val[p] * rays[q].v[j] - val[q] * rays[p].v[j];
        set_bit(common, k);
        next.push_back({normalized(v), std::move(common)});
      }
    rays = std::move(next);
  }
  ConeGenerators out;
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  for (auto& l : lines) out.lines.push_back(normalized(l));
  return out;
}

// ---------------------------------------------------------------------------

Cone::Cone(std::size_t ambient_dim, QMatrix inequalities, QMatrix equalities)
    : n_(ambient_dim), ineqs_(dedupe_rows(inequalities)), eqs_(std::move(equalities)) {
  for (const auto& r : ineqs_)
    if (r.size() != n_) throw DomainError("cone inequality has the wrong length");
  for (const auto& r : eqs_)
    if (r.size() != n_) throw DomainError("cone equality has the wrong length");
  eqs_ = rref(eqs_, n_).rows;
}

Cone Cone::from_generators(std::size_t ambient_dim, const QMatrix& rays, const QMatrix& lines) {
  ConeGenerators dual = double_description(rays, lines, ambient_dim);
  Cone c(ambient_dim, dual.rays, dual.lines);
  c.gens_ = ConeGenerators{dedupe_rows(rays), lines};
  return c;
}

void Cone::analyze() const {
  if (analyzed_) return;
  const std::size_t m = ineqs_.size();
  LinearProgram lp(n_ + m);
  for (std::size_t i = 0; i < m; ++i) {
    lp.nonneg[n_ + i] = true;
    lp.objective[n_ + i] = 1;
    QVector row(n_ + m, 0);
    for (std::size_t j = 0; j < n_; ++j) row[j] = ineqs_[i][j];
    row[n_ + i] = -1;
    lp.add(std::move(row), LinearProgram::Rel::ge, 0);
    QVector cap(n_ + m, 0);
    cap[n_ + i] = 1;
    lp.add(std::move(cap), LinearProgram::Rel::le, 1);
  }
  for (const auto& e : eqs_) {
    QVector row(n_ + m, 0);
    for (std::size_t j = 0; j < n_; ++j) row[j] = e[j];
    lp.add(std::move(row), LinearProgram::Rel::eq, 0);
  }
  lp.maximize = true;
  LpResult r = solve_lp(lp);
  if (!r.optimal()) throw DomainError("cone analysis LP failed");
  implicit_.assign(m, false);
  for (std::size_t i = 0; i < m; ++i) implicit_[i] = r.x[n_ + i] == 0;
  interior_.assign(r.x.begin(), r.x.begin() + static_cast<long>(n_));
  analyzed_ = true;
}

bool Cone::contains(const QVector& w) const {
  if (w.size() != n_) throw DomainError("point has the wrong dimension");
  for (const auto& a : ineqs_)
    if (dot(a, w) < 0) return false;
  for (const auto& e : eqs_)
    if (dot(e, w) != 0) return false;
  return true;
}

bool Cone::contains_in_relative_interior(const QVector& w) const {
  if (!contains(w)) return false;
  analyze();
  for (std::size_t i = 0; i < ineqs_.size(); ++i)
    if (!implicit_[i] && dot(ineqs_[i], w) == 0) return false;
  return true;
}

QMatrix Cone::linear_span() const {
  analyze();
  QMatrix Q = eqs_;
  for (std::size_t i = 0; i < ineqs_.size(); ++i)
    if (implicit_[i]) Q.push_back(ineqs_[i]);
  return Q.empty() ? identity(n_) : nullspace(Q, n_);
}

std::size_t Cone::dimension() const { return linear_span().size(); }

QMatrix Cone::lineality() const {
  QMatrix Q = eqs_;
  Q.insert(Q.end(), ineqs_.begin(), ineqs_.end());
  return Q.empty() ? identity(n_) : nullspace(Q, n_);
}

QVector Cone::relative_interior_point() const {
  analyze();
  return interior_;
}

QMatrix Cone::facet_normals() const {
  analyze();
  QMatrix Q = eqs_;
  for (std::size_t i = 0; i < ineqs_.size(); ++i)
    if (implicit_[i]) Q.push_back(ineqs_[i]);
  Rref R = rref(Q, n_);
  QMatrix cands;
  for (std::size_t i = 0; i < ineqs_.size(); ++i)
    if (!implicit_[i]) cands.push_back(reduce_mod(R, ineqs_[i]));
  cands = dedupe_rows(cands);
  QMatrix facets;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    // Facet iff some point of the span violates it while satisfying the rest.
    LinearProgram lp(n_);
    for (std::size_t k = 0; k < cands.size(); ++k)
      if (k != i) lp.add(cands[k], LinearProgram::Rel::ge, 0);
    for (const auto& q : R.rows) lp.add(q, LinearProgram::Rel::eq, 0);
    lp.add(cands[i], LinearProgram::Rel::le, -1);
    if (feasible(lp)) facets.push_back(cands[i]);
  }
  return facets;
}

Cone Cone::face(const QVector& v) const {
  QMatrix eqs = eqs_;
  eqs.push_back(v);
  return Cone(n_, ineqs_, std::move(eqs));
}

Cone Cone::face_containing(const QVector& w) const {
  if (!contains(w)) throw DomainError("point is not in the cone");
  QMatrix eqs = eqs_;
  for (const auto& a : ineqs_)
    if (dot(a, w) == 0) eqs.push_back(a);
  return Cone(n_, ineqs_, std::move(eqs));
}

const ConeGenerators& Cone::generators() const {
  if (!gens_) gens_ = double_description(ineqs_, eqs_, n_);
  return *gens_;
}

// ---------------------------------------------------------------------------

Cone groebner_cone(const MarkedGroebnerBasis& G) {
  QMatrix ineqs;
  for (const auto& d : G.difference_vectors()) ineqs.push_back(to_rational(d));
  return Cone(G.ring()->nvars(), std::move(ineqs));
}

QMatrix lineality_space(const Ideal& I) {
  if (!I.is_homogeneous()) throw DomainError("lineality space needs a homogeneous ideal");
  const std::size_t n = I.ring()->nvars();
  MarkedGroebnerBasis G = buchberger(I, TermOrder::grevlex());
  QMatrix diffs;
  for (const auto& d : G.difference_vectors()) diffs.push_back(to_rational(d));
  QMatrix space = diffs.empty() ? identity(n) : nullspace(diffs, n);
  QMatrix basis;
  for (const auto& row : I.ring()->grading()) {
    QVector v = to_rational(row);
    if (!in_span(basis, v, n)) basis.push_back(std::move(v));
  }
  for (const auto& v : space) {
    if (basis.size() == space.size()) break;
    if (!in_span(basis, v, n)) basis.push_back(normalized(v));
  }
  for (const auto& w : basis) {
    Ideal in = initial_ideal(I, w).ideal;
    if (!same_ideal(in, I)) throw DomainError("lineality verification failed");
  }
  return basis;
}

std::vector<ZVector> rays_mod_lineality(const Cone& C, const QMatrix& L, const std::optional<QVector>& shift) {
  const std::size_t n = C.ambient_dim();
  const ConeGenerators& g = C.generators();
  for (const auto& line : g.lines)
    if (!in_span(L, line, n)) throw DomainError("cone modulo the given lineality is not strongly convex");
  Rref R = rref(L, n);
  std::set<ZVector> seen;
  std::vector<ZVector> out;
  for (const auto& ray : g.rays) {
    QVector v = reduce_mod(R, ray);
    if (is_zero(v)) continue;
    ZVector p = primitive(v);
    if (shift) {
      // Least k >= 0 with p + k * shift >= 0 coordinatewise.
      Rational k = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (p[j] < 0) {
          if ((*shift)[j] <= 0) {
            k = -1;
            break;
          }
          Rational need = Rational(-p[j]) / (*shift)[j];
          Integer c;
          mpz_cdiv_q(c.get_mpz_t(), need.get_num_mpz_t(), need.get_den_mpz_t());
          if (c > k) k = c;
        }
      if (k > 0) {
        QVector moved(n);
        for (std::size_t j = 0; j < n; ++j) moved[j] = p[j] + k * (*shift)[j];
        if (std::all_of(moved.begin(), moved.end(), [](const Rational& x) { return x.get_den() == 1; }))
          for (std::size_t j = 0; j < n; ++j) p[j] = moved[j].get_num();
      }
    }
    if (seen.insert(p).second) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

/// Facets and equations of conv(points) via the dual cone of the homogenization.
std::pair<std::vector<Polytope::Halfspace>, std::vector<Polytope::Halfspace>> dual_hull(const QMatrix& points,
                                                                                     std::size_t n) {
  QMatrix lifted;
  for (const auto& p : points) {
    QVector row{1};
    row.insert(row.end(), p.begin(), p.end());
    lifted.push_back(std::move(row));
  }
  ConeGenerators g = double_description(lifted, {}, n + 1);
  std::pair<std::vector<Polytope::Halfspace>, std::vector<Polytope::Halfspace>> out;
  auto split = [](const QVector& v) { return Polytope::Halfspace{v[0], QVector(v.begin() + 1, v.end())}; };
  for (const auto& l : g.lines) out.second.push_back(split(l));
  QMatrix eqs;
  for (const auto& l : g.lines) eqs.push_back(l);
  Rref R = rref(eqs, n + 1);
  for (const auto& r : g.rays) {
    // Skip the trivial inequality 1 >= 0 (nonzero only in c0 modulo equations).
    QVector red = reduce_mod(R, r);
    bool trivial = true;
    for (std::size_t j = 1; j <= n; ++j)
      if (red[j] != 0) trivial = false;
    if (!trivial) out.first.push_back(split(r));
  }
  return out;
}

std::size_t affine_dim(const QMatrix& pts, std::size_t n) {
  if (pts.size() <= 1) return 0;
  QMatrix diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVector d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = pts[i][j] - pts[0][j];
    diffs.push_back(std::move(d));
  }
  return rank(diffs, n);
}

std::optional<QVector> convex_weights(const QMatrix& pts, const QVector& p, std::size_t skip) {
  const std::size_t k = pts.size();
  const std::size_t n = p.size();
  LinearProgram lp(k);
  lp.nonneg.assign(k, true);
  for (std::size_t j = 0; j < n; ++j) {
    QVector row(k, 0);
    for (std::size_t i = 0; i < k; ++i)
      if (i != skip) row[i] = pts[i][j];
    lp.add(std::move(row), LinearProgram::Rel::eq, p[j]);
  }
  QVector ones(k, 1);
  if (skip < k) ones[skip] = 0;
  lp.add(std::move(ones), LinearProgram::Rel::eq, 1);
  if (skip < k) {
    QVector e(k, 0);
    e[skip] = 1;
    lp.add(std::move(e), LinearProgram::Rel::eq, 0);
  }
  LpResult r = solve_lp(lp);
  if (!r.optimal()) return std::nullopt;
  return r.x;
}

}  // namespace

Polytope::Polytope(std::size_t ambient_dim, QMatrix points) : n_(ambient_dim) {
  if (points.empty()) throw DomainError("convex hull of an empty point set");
  for (const auto& p : points)
    if (p.size() != n_) throw DomainError("point has the wrong dimension");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points.size() == 1 || !convex_weights(points, points[i], i)) vertices_.push_back(points[i]);
  // Removing one redundant point at a time could keep a point that is a
  // combination of two other redundant points only; re-run on survivors.
  if (vertices_.size() != points.size()) *this = Polytope(n_, vertices_, true);
}

Polytope::Polytope(std::size_t ambient_dim, QMatrix vertices, bool) : n_(ambient_dim), vertices_(std::move(vertices)) {}

std::size_t Polytope::affine_dimension() const { return affine_dim(vertices_, n_); }

void Polytope::compute_facets() const {
  if (!hrep_) hrep_ = dual_hull(vertices_, n_);
}

const std::vector<Polytope::Halfspace>& Polytope::facets() const {
  compute_facets();
  return hrep_->first;
}

const std::vector<Polytope::Halfspace>& Polytope::equations() const {
  compute_facets();
  return hrep_->second;
}

std::optional<QVector> Polytope::convex_certificate(const QVector& p) const {
  if (p.size() != n_) throw DomainError("point has the wrong dimension");
  return convex_weights(vertices_, p, vertices_.size());
}

bool Polytope::contains(const QVector& p) const { return convex_certificate(p).has_value(); }

Polytope convex_hull(const QMatrix& points) {
  if (points.empty()) throw DomainError("convex hull of an empty point set");
  return Polytope(points[0].size(), points);
}

LpExtreme lp_extreme(const Polytope& P, const QVector& c, bool maximize) {
  if (c.size() != P.ambient_dim()) throw DomainError("objective has the wrong dimension");
  LpExtreme best{dot(c, P.vertices()[0]), P.vertices()[0]};
  for (const auto& v : P.vertices()) {
    Rational val = dot(c, v);
    if (maximize ? val > best.value : val < best.value) best = {val, v};
  }
  return best;
}

Polytope project(const Polytope& P, const std::vector<std::size_t>& coords) {
  QMatrix pts;
  for (const auto& v : P.vertices()) {
    QVector q;
    for (auto c : coords) {
      if (c >= P.ambient_dim()) throw DomainError("projection coordinate out of range");
      q.push_back(v[c]);
    }
    pts.push_back(std::move(q));
  }
  return Polytope(coords.size(), std::move(pts));
}

namespace {

void triangulate_rec(const QMatrix& all, const std::vector<std::size_t>& idx, std::size_t n,
                     std::vector<std::vector<std::size_t>>& out) {
  QMatrix pts;
  for (auto i : idx) pts.push_back(all[i]);
  std::size_t q = affine_dim(pts, n);
  if (idx.size() == q + 1) {
    out.push_back(idx);
    return;
  }
  auto facets = dual_hull(pts, n).first;
  const QVector& apex = all[idx[0]];
  for (const auto& h : facets) {
    if (h.c0 + dot(h.c, apex) == 0) continue;
    std::vector<std::size_t> face;
    for (auto i : idx)
      if (h.c0 + dot(h.c, all[i]) == 0) face.push_back(i);
    std::vector<std::vector<std::size_t>> sub;
    triangulate_rec(all, face, n, sub);
    for (auto& s : sub) {
      s.insert(s.begin(), idx[0]);
      out.push_back(std::move(s));
    }
  }
}

}  // namespace

std::vector<std::vector<std::size_t>> triangulate(const Polytope& P) {
  std::vector<std::size_t> idx(P.vertices().size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::vector<std::vector<std::size_t>> out;
  triangulate_rec(P.vertices(), idx, P.ambient_dim(), out);
  return out;
}

ZMatrix lattice_in_subspace(const ZMatrix& lattice, const QMatrix& subspace, std::size_t n) {
  ZMatrix Lb = hermite_normal_form(lattice, n);
  QMatrix normals = subspace.empty() ? identity(n) : nullspace(subspace, n);
  if (normals.empty()) return Lb;
  // Integer combinations c of Lb rows with N (c Lb)^T = 0.
  QMatrix K(normals.size(), QVector(Lb.size(), 0));
  for (std::size_t i = 0; i < normals.size(); ++i)
    for (std::size_t r = 0; r < Lb.size(); ++r)
      for (std::size_t j = 0; j < n; ++j) K[i][r] += normals[i][j] * Lb[r][j];
  ZMatrix C = integer_kernel(to_integer_rows(K), Lb.size());
  ZMatrix out;
  for (const auto& c : C) {
    ZVector v(n, 0);
    for (std::size_t r = 0; r < Lb.size(); ++r)
      for (std::size_t j = 0; j < n; ++j) v[j] += c[r] * Lb[r][j];
    out.push_back(std::move(v));
  }
  return hermite_normal_form(std::move(out), n);
}

Rational normalized_volume(const Polytope& P, const std::optional<ZMatrix>& lattice) {
  const std::size_t n = P.ambient_dim();
  const QMatrix& V = P.vertices();
  const std::size_t q = P.affine_dimension();
  if (q == 0) return 1;
  QMatrix diffs;
  for (std::size_t i = 1; i < V.size(); ++i) {
    QVector d(n);
    for (std::size_t j = 0; j < n; ++j) d[j] = V[i][j] - V[0][j];
    diffs.push_back(std::move(d));
  }
  QMatrix direction = rref(diffs, n).rows;
  ZMatrix gens = lattice ? *lattice : ZMatrix{};
  if (!lattice)
    for (std::size_t i = 0; i < n; ++i) {
      ZVector e(n, 0);
      e[i] = 1;
      gens.push_back(std::move(e));
    }
  ZMatrix B = lattice_in_subspace(gens, direction, n);
  if (B.size() != q) throw DomainError("lattice does not span the direction space of the polytope");
  // Coordinates in B: solve c B = e via the transposed system.
  QMatrix BT(n, QVector(q, 0));
  for (std::size_t r = 0; r < q; ++r)
    for (std::size_t j = 0; j < n; ++j) BT[j][r] = B[r][j];
  Rational total = 0;
  for (const auto& simplex : triangulate(P)) {
    QMatrix coords;
    for (std::size_t k = 1; k < simplex.size(); ++k) {
      QVector e(n);
      for (std::size_t j = 0; j < n; ++j) e[j] = V[simplex[k]][j] - V[simplex[0]][j];
      auto c = solve(BT, e, q);
      if (!c) throw DomainError("simplex edge outside the lattice span");
      coords.push_back(std::move(*c));
    }
    total += abs(determinant(std::move(coords)));
  }
  return total;
}

}  // namespace torideg
