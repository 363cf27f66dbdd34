#include "torideg/tropical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "torideg/error.hpp"
#include "torideg/linalg.hpp"
#include "torideg/lp.hpp"

namespace torideg {

namespace {

std::string lead_key(const MarkedGroebnerBasis& G) {
  std::vector<Monomial> leads = G.leads();
  std::sort(leads.begin(), leads.end());
  std::string s;
  for (const auto& m : leads) s += monomial_to_string(m, *G.ring()) + ";";
  return s;
}

bool has_nonzero_constant(const std::vector<MultiPoly>& gens) {
  for (const auto& g : gens)
    if (g.is_monomial() && g.terms()[0].first.is_one()) return true;
  return false;
}

ZVector integral_row(const QVector& v) {
  ZVector out;
  for (const auto& x : v) {
    if (x.get_den() != 1) return primitive(v);
    out.push_back(x.get_num());
  }
  return out;
}

Monomial exponent_monomial(std::size_t nvars, std::size_t offset, const ZVector& e, bool positive_part) {
  std::vector<Exponent> a(nvars, 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    Integer v = positive_part ? e[i] : Integer(-e[i]);
    if (v > 0) {
      if (!v.fits_sint_p()) throw LimitError("toric exponent too large");
      a[offset + i] = static_cast<Exponent>(v.get_si());
    }
  }
  return Monomial(std::move(a));
}

/// Rows spanning the same space as M, all nonnegative, the first one positive
/// on every column; nullopt if no positive vector lies in the row space.
std::optional<ZMatrix> nonnegative_rows(const ZMatrix& M, std::size_t n) {
  const std::size_t d = M.size();
  if (d == 0) return std::nullopt;
  LinearProgram lp(d);
  for (std::size_t j = 0; j < n; ++j) {
    QVector col(d);
    for (std::size_t i = 0; i < d; ++i) col[i] = M[i][j];
    lp.add(std::move(col), LinearProgram::Rel::ge, 1);
  }
  LpResult r = solve_lp(lp);
  if (!r.optimal()) return std::nullopt;
  QVector p(n, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < n; ++j) p[j] += r.x[i] * M[i][j];
  ZVector pz = primitive(p);
  ZMatrix out{pz};
  for (const auto& row : M) {
    Integer k = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (row[j] < 0) {
        Integer c;
        Integer neg = -row[j];
        mpz_cdiv_q(c.get_mpz_t(), neg.get_mpz_t(), pz[j].get_mpz_t());
        k = std::max(k, c);
      }
    ZVector shifted(n);
    for (std::size_t j = 0; j < n; ++j) shifted[j] = row[j] + k * pz[j];
    out.push_back(std::move(shifted));
  }
  return out;
}

}  // namespace

std::string ideal_key(const Ideal& I) {
  MarkedGroebnerBasis G = buchberger(I, TermOrder::grevlex());
  std::string s;
  for (const auto& g : G.elements()) s += to_string(g) + ";";
  return s;
}

GroebnerFan gfan_traverse(const Ideal& I, std::size_t ceiling) {
  if (!I.is_homogeneous()) throw DomainError("Groebner fan traversal needs a homogeneous ideal");
  const std::size_t n = I.ring()->nvars();
  QMatrix L = lineality_space(I);
  if (n - L.size() > ceiling)
    throw LimitError("Groebner fan has dimension " + std::to_string(n - L.size()) +
                     " modulo lineality, above the ceiling " + std::to_string(ceiling) + "; supply cones directly");
  GroebnerFan fan{I, L, {}, {}, {}};
  std::map<std::string, std::size_t> index;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  auto add = [&](MarkedGroebnerBasis G) {
    std::string key = lead_key(G);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    std::size_t id = fan.bases.size();
    index.emplace(std::move(key), id);
    fan.cones.push_back(groebner_cone(G));
    fan.bases.push_back(std::move(G));
    return id;
  };
  add(buchberger(I, TermOrder::grevlex()));
  for (std::size_t i = 0; i < fan.bases.size(); ++i) {
    const QMatrix normals = fan.cones[i].facet_normals();
    for (const auto& v : normals) {
      QVector u = to_rational(primitive(fan.cones[i].face(v).relative_interior_point()));
      QVector minus_v(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) minus_v[j] = -v[j];
      TermOrder across = TermOrder::matrix({u, minus_v}, TermOrder::grevlex());
      std::size_t j = add(buchberger(I, across));
      if (j == i) throw DomainError("facet flip returned the same cone");
      edges.emplace(std::min(i, j), std::max(i, j));
    }
  }
  fan.adjacency.assign(edges.begin(), edges.end());
  return fan;
}

bool is_monomial_free(const Ideal& J) {
  if (J.is_zero()) return true;
  const RingPtr& ring = J.ring();
  const std::size_t n = ring->nvars();
  if (J.is_homogeneous()) {
    Ideal S = J;
    for (std::size_t v = 0; v < n; ++v) {
      S = saturate_variable(S, v);
      if (has_nonzero_constant(S.generators())) return false;
    }
    return !has_nonzero_constant(buchberger(S, TermOrder::grevlex()).elements());
  }
  // Non-homogeneous input: J + (s x_1...x_n - 1) is the unit ideal iff J
  // contains a monomial.
  Ring::Grading grading{std::vector<long>(n + 1, 1)};
  RingPtr ext = ring->extend({"_s"}, grading);
  std::vector<std::size_t> image(n);
  for (std::size_t j = 0; j < n; ++j) image[j] = j;
  std::vector<MultiPoly> gens;
  for (const auto& g : J.generators()) gens.push_back(relabel(g, image, ext));
  std::vector<Exponent> all(n + 1, 1);
  gens.push_back(MultiPoly::monomial(ext, Monomial(all)) - MultiPoly::constant(ext, 1));
  return !has_nonzero_constant(buchberger(Ideal(ext, std::move(gens)), TermOrder::grevlex()).elements());
}

Ideal toric_ideal(const ZMatrix& M, RingPtr ring) {
  const std::size_t n = M.empty() ? (ring ? ring->nvars() : 0) : M[0].size();
  for (const auto& row : M)
    if (row.size() != n) throw DomainError("ragged toric matrix");
  if (!ring) {
    std::vector<std::string> names;
    for (std::size_t j = 0; j < n; ++j) names.push_back("x" + std::to_string(j + 1));
    ring = Ring::standard(std::move(names));
  }
  if (ring->nvars() != n) throw DomainError("toric matrix width differs from the ring's variable count");

  std::vector<std::string> names;
  std::vector<MultiPoly> gens;
  RingPtr ext;
  std::size_t head;
  if (auto rows = nonnegative_rows(M, n)) {
    // Homogeneous elimination: z_i of degree 1, x_j of degree sum_i M'_ij.
    head = rows->size();
    for (std::size_t i = 0; i < head; ++i) names.push_back("_z" + std::to_string(i));
    for (const auto& nm : ring->names()) names.push_back(nm);
    std::vector<long> grading(head, 1);
    for (std::size_t j = 0; j < n; ++j) {
      Integer s = 0;
      for (const auto& r : *rows) s += r[j];
      if (!s.fits_slong_p()) throw LimitError("toric degree too large");
      grading.push_back(s.get_si());
    }
    ext = Ring::make(names, {grading});
    for (std::size_t j = 0; j < n; ++j) {
      ZVector col;
      for (const auto& r : *rows) col.push_back(r[j]);
      gens.push_back(MultiPoly::variable(ext, head + j) -
                     MultiPoly::monomial(ext, exponent_monomial(head + n, 0, col, true)));
    }
  } else {
    // Laurent elimination: t * z_1...z_d = 1 makes the z invertible.
    const std::size_t d = M.size();
    head = d + 1;
    names.push_back("_t");
    for (std::size_t i = 0; i < d; ++i) names.push_back("_z" + std::to_string(i));
    for (const auto& nm : ring->names()) names.push_back(nm);
    ext = Ring::standard(names);
    std::vector<Exponent> tz(head + n, 0);
    for (std::size_t i = 0; i < head; ++i) tz[i] = 1;
    gens.push_back(MultiPoly::monomial(ext, Monomial(tz)) - MultiPoly::constant(ext, 1));
    for (std::size_t j = 0; j < n; ++j) {
      ZVector col;
      for (const auto& r : M) col.push_back(r[j]);
      Monomial neg = exponent_monomial(head + n, 1, col, false);
      Monomial pos = exponent_monomial(head + n, 1, col, true);
      gens.push_back(MultiPoly::variable(ext, head + j).times_monomial(neg) - MultiPoly::monomial(ext, pos));
    }
  }
  MarkedGroebnerBasis G =
      buchberger(Ideal(ext, std::move(gens)), TermOrder::block(head, TermOrder::grevlex(), TermOrder::grevlex()));
  std::vector<std::size_t> eliminated(head);
  for (std::size_t i = 0; i < head; ++i) eliminated[i] = i;
  QVector zeros(head, 0);
  std::vector<MultiPoly> out;
  for (const auto& g : G.elements()) {
    bool pure = true;
    for (const auto& [m, c] : g.terms())
      for (std::size_t i = 0; i < head && pure; ++i)
        if (m[i] != 0) pure = false;
    if (pure) out.push_back(substitute(g, eliminated, zeros, ring));
  }
  return Ideal(ring, std::move(out));
}

bool equal_up_to_rescaling(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw DomainError("ideals live in different rings");
  MarkedGroebnerBasis A = buchberger(a, TermOrder::grevlex());
  MarkedGroebnerBasis B = buchberger(b, TermOrder::grevlex());
  if (A.size() != B.size() || A.leads() != B.leads()) return false;
  const std::size_t n = a.ring()->nvars();
  // Constraints lambda^d = rho, one per non-leading term.
  ZMatrix D;
  std::vector<Rational> rho;
  for (std::size_t i = 0; i < A.size(); ++i) {
    const auto& ta = A.elements()[i].terms();
    const auto& tb = B.elements()[i].terms();
    if (ta.size() != tb.size()) return false;
    for (std::size_t k = 0; k < ta.size(); ++k) {
      if (ta[k].first != tb[k].first) return false;
      if (ta[k].first == A.leads()[i]) continue;
      ZVector d(n);
      for (std::size_t j = 0; j < n; ++j) d[j] = ta[k].first[j] - A.leads()[i][j];
      D.push_back(std::move(d));
      rho.push_back(tb[k].second / ta[k].second);
    }
  }
  if (D.empty()) return true;
  // Solvable over an algebraically closed field iff every integer relation
  // among the d's is respected by the rho's.
  ZMatrix DT(n, ZVector(D.size()));
  for (std::size_t r = 0; r < D.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) DT[j][r] = D[r][j];
  for (const auto& k : integer_kernel(DT, D.size())) {
    Rational prod = 1;
    for (std::size_t r = 0; r < k.size(); ++r) {
      if (k[r] == 0) continue;
      if (!k[r].fits_slong_p()) throw LimitError("relation exponent too large");
      long e = k[r].get_si();
      Rational base = e > 0 ? rho[r] : Rational(1) / rho[r];
      Rational p;
      mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(std::labs(e)));
      mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(std::labs(e)));
      p.canonicalize();
      prod *= p;
    }
    if (prod != 1) return false;
  }
  return true;
}

TropicalCone certify_prime_cone(const Ideal& I, const ZMatrix& M, std::size_t lineality_rows, bool check_toric) {
  const std::size_t n = I.ring()->nvars();
  if (lineality_rows > M.size()) throw DomainError("more lineality rows than matrix rows");
  QMatrix lines, rays;
  QVector w(n, 0);
  for (std::size_t r = 0; r < M.size(); ++r) {
    if (M[r].size() != n) throw DomainError("ray matrix width differs from the ring's variable count");
    QVector v = to_rational(M[r]);
    if (r < lineality_rows) {
      lines.push_back(std::move(v));
    } else {
      for (std::size_t j = 0; j < n; ++j) w[j] += v[j];
      rays.push_back(std::move(v));
    }
  }
  InitialIdeal in = initial_ideal(I, w);
  Cone face = groebner_cone(in.basis).face_containing(w);
  QMatrix all = lines;
  all.insert(all.end(), rays.begin(), rays.end());
  const std::size_t r = rank(all, n);
  auto inside = [&](const QVector& v) { return face.contains(v); };
  bool ok = face.dimension() == r && std::all_of(rays.begin(), rays.end(), inside);
  for (const auto& l : lines) {
    QVector neg(n);
    for (std::size_t j = 0; j < n; ++j) neg[j] = -l[j];
    ok = ok && inside(l) && inside(neg);
  }
  if (!ok) throw DomainError("the given rays do not span a face of the Groebner cone at their sum");

  TropicalCone t{face, in.ideal, M, lineality_rows, r};
  PrimeVerdict v = prime_verdict(in.ideal, M, check_toric);
  t.monomial_free = v.monomial_free;
  t.binomial = v.binomial;
  t.toric = v.toric;
  t.prime = v.prime();
  return t;
}

std::string PrimeVerdict::failure() const {
  if (!monomial_free) return "initial ideal contains a monomial";
  if (!binomial) return "initial ideal is not binomial";
  if (!toric) return "initial ideal differs from the toric ideal of the matrix columns";
  return "";
}

PrimeVerdict prime_verdict(const Ideal& J, const ZMatrix& M, bool check_toric) {
  PrimeVerdict v;
  v.monomial_free = is_monomial_free(J);
  // Binomiality is read off the reduced basis; a toric ideal is binomial and
  // monomial-free, so the expensive comparison only runs when both hold.
  MarkedGroebnerBasis G = buchberger(J, TermOrder::grevlex());
  v.binomial = std::all_of(G.elements().begin(), G.elements().end(), [](const MultiPoly& g) { return g.size() <= 2; });
  if (check_toric && v.monomial_free && v.binomial) v.toric = equal_up_to_rescaling(J, toric_ideal(M, J.ring()));
  return v;
}

std::vector<TropicalCone> tropicalize(const Ideal& I, bool include_faces, std::size_t ceiling) {
  GroebnerFan fan = gfan_traverse(I, ceiling);
  const std::size_t lin = fan.lineality.size();
  struct Face {
    Cone cone;
    QVector point;
    std::size_t dim;
  };
  std::vector<Face> free_faces;
  std::set<std::string> seen;
  std::vector<Cone> stack(fan.cones.begin(), fan.cones.end());
  while (!stack.empty()) {
    Cone F = std::move(stack.back());
    stack.pop_back();
    QVector p = F.relative_interior_point();
    Ideal in = initial_ideal(I, p).ideal;
    if (!seen.insert(ideal_key(in)).second) continue;
    const std::size_t dim = F.dimension();
    if (is_monomial_free(in)) free_faces.push_back({F, p, dim});
    if (dim > lin)
      for (const auto& v : F.facet_normals()) stack.push_back(F.face(v));
  }
  std::sort(free_faces.begin(), free_faces.end(), [](const Face& a, const Face& b) {
    return a.dim != b.dim ? a.dim > b.dim : a.point < b.point;
  });

  ZMatrix lineality_rows;
  for (const auto& l : fan.lineality) lineality_rows.push_back(integral_row(l));
  QVector shift = to_rational(I.ring()->positive_weight());
  std::vector<TropicalCone> out;
  for (std::size_t i = 0; i < free_faces.size(); ++i) {
    bool maximal = true;
    for (std::size_t k = 0; k < free_faces.size() && maximal; ++k)
      if (free_faces[k].dim > free_faces[i].dim && free_faces[k].cone.contains(free_faces[i].point)) maximal = false;
    if (!maximal && !include_faces) continue;
    ZMatrix M = lineality_rows;
    for (auto& ray : rays_mod_lineality(free_faces[i].cone, fan.lineality, shift)) M.push_back(std::move(ray));
    out.push_back(certify_prime_cone(I, M, lin));
  }
  return out;
}

}  // namespace torideg
