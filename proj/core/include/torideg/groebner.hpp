#pragma once

#include <optional>
#include <vector>

#include "torideg/orders.hpp"
#include "torideg/poly.hpp"

namespace torideg {

/// Ideal of a polynomial ring given by generators; zero generators are dropped.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<MultiPoly> generators);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MultiPoly>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool is_zero() const { return gens_.empty(); }
  /// Every generator is homogeneous for the ring's multigrading.
  bool is_homogeneous() const;
  bool is_monomial() const;

 private:
  RingPtr ring_;
  std::vector<MultiPoly> gens_;
};

/// Gröbner basis with a designated leading monomial per element.
class MarkedGroebnerBasis {
 public:
  MarkedGroebnerBasis(RingPtr ring, TermOrder order, std::vector<MultiPoly> elements, std::vector<Monomial> leads,
                      bool reduced);

  const RingPtr& ring() const { return ring_; }
  const TermOrder& order() const { return order_; }
  const std::vector<MultiPoly>& elements() const { return elements_; }
  const std::vector<Monomial>& leads() const { return leads_; }
  std::size_t size() const { return elements_.size(); }
  bool reduced() const { return reduced_; }

  Ideal ideal() const { return Ideal(ring_, elements_); }
  Ideal lead_ideal() const;
  /// Exponent vectors lead - a for every tail monomial a.
  std::vector<std::vector<long>> difference_vectors() const;

  friend bool operator==(const MarkedGroebnerBasis& a, const MarkedGroebnerBasis& b) {
    return same_ring(a.ring_, b.ring_) && a.elements_ == b.elements_ && a.leads_ == b.leads_;
  }

 private:
  RingPtr ring_;
  TermOrder order_;
  std::vector<MultiPoly> elements_;
  std::vector<Monomial> leads_;
  bool reduced_;
};

/// Reduced Gröbner basis, monic, sorted by decreasing lead. For ideals that
/// are homogeneous for the ring grading the order only needs to be total on
/// monomials of equal degree; otherwise it must be a total well-order.
MarkedGroebnerBasis buchberger(const Ideal& I, const TermOrder& order);

/// Remainder of f after full reduction by the marked leads.
MultiPoly normal_form(const MultiPoly& f, const MarkedGroebnerBasis& G);
bool ideal_contains(const MarkedGroebnerBasis& G, const MultiPoly& f);

/// Buchberger's criterion on the generators as given: every S-pair of
/// non-coprime leads reduces to zero.
bool is_groebner_basis(const Ideal& I, const TermOrder& order);

/// Terms of f with maximal w.a.
MultiPoly initial_form(const MultiPoly& f, const QVector& w);
/// Terms of f whose value M.b is the maximum under W.order.
MultiPoly initial_form_matrix(const MultiPoly& f, const WeightingMatrix& W);

/// Order comparing first by w, then by `tie`.
TermOrder refine(const QVector& w, const TermOrder& tie);
TermOrder refine(const WeightingMatrix& W, const TermOrder& tie);

/// Refined reduced Gröbner basis together with the initial ideal it induces.
struct InitialIdeal {
  Ideal ideal;
  MarkedGroebnerBasis basis;
};

InitialIdeal initial_ideal(const Ideal& I, const QVector& w, const TermOrder& tie = TermOrder::grevlex());
InitialIdeal initial_ideal(const Ideal& I, const WeightingMatrix& W, const TermOrder& tie = TermOrder::grevlex());

/// f^{h;w} = t^{max w.a} f(t^{-w_1} x_1, ...), in `target` whose last variable is t.
MultiPoly homogenize_poly(const MultiPoly& f, const ZVector& w, const RingPtr& target);

/// Homogenization in k[x, t] of the refined reduced basis. The new ring grades
/// t by zero in the old rows and adds the row (-w, 1) shifted to be nonnegative.
Ideal homogenize(const Ideal& I, const ZVector& w, const TermOrder& tie = TermOrder::grevlex(),
                 const std::string& tname = "t");

/// All monomials of the given multidegree, in decreasing grevlex order.
std::vector<Monomial> monomials_of_degree(const Ring& ring, const std::vector<long>& degree);

/// Monomials of the given degree outside the monomial ideal J.
std::vector<Monomial> standard_monomials(const Ideal& J, const std::vector<long>& degree);

/// Equality of ideals via reduced grevlex bases.
bool same_ideal(const Ideal& a, const Ideal& b);

/// Krull dimension of S/I, read off the lead ideal of a grevlex basis.
std::size_t krull_dimension(const Ideal& I);

/// J : x_var^infinity for homogeneous J.
Ideal saturate_variable(const Ideal& J, std::size_t var);

}  // namespace torideg
