#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torideg/rational.hpp"
#include "torideg/ring.hpp"

namespace torideg {

/// Graded reverse lexicographic comparison a > b (total degree first, then the
/// last differing exponent smaller wins). Used as the storage order of MultiPoly.
bool grevlex_greater(const Monomial& a, const Monomial& b);

/// Sparse polynomial with rational coefficients. Terms are kept in
/// descending grevlex order with no zero coefficients, so equal polynomials
/// have identical term vectors.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  explicit MultiPoly(RingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(RingPtr ring, const Rational& c);
  static MultiPoly variable(RingPtr ring, std::size_t var);
  static MultiPoly monomial(RingPtr ring, Monomial m, const Rational& c = 1);
  /// Merges duplicate monomials and drops zeros.
  static MultiPoly from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational coefficient(const Monomial& m) const;
  std::vector<Monomial> support() const;

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& g) const;
  MultiPoly operator-(const MultiPoly& g) const;
  MultiPoly operator*(const MultiPoly& g) const;
  MultiPoly scaled(const Rational& c) const;
  MultiPoly times_monomial(const Monomial& m, const Rational& c = 1) const;
  MultiPoly pow(unsigned k) const;

  /// Same terms in another ring with the same number of variables.
  MultiPoly rebased(RingPtr ring) const;

  friend bool operator==(const MultiPoly& f, const MultiPoly& g) {
    return same_ring(f.ring_, g.ring_) && f.terms_ == g.terms_;
  }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

enum class ArithOp { add, sub, mul };

/// Exact add/sub/mul; throws DomainError on ring mismatch.
MultiPoly poly_arith(ArithOp op, const MultiPoly& f, const MultiPoly& g);

/// Parses infix arithmetic (+ - * / ^ and parentheses) over the ring's
/// variables with rational constants and returns the expanded canonical form.
MultiPoly parse_poly(std::string_view text, const RingPtr& ring);

std::string to_string(const MultiPoly& f);
std::string monomial_to_string(const Monomial& m, const Ring& ring);

struct MultidegreeReport {
  bool homogeneous = true;
  std::vector<long> degree;  // valid when homogeneous
  std::optional<std::pair<Monomial, Monomial>> witnesses;
};

/// D·a when every term shares it; otherwise two monomials of different degree.
/// Throws DomainError for the zero polynomial.
MultidegreeReport multidegree(const MultiPoly& f);

bool is_homogeneous(const MultiPoly& f);

/// Substitutes rational values for the variables listed in `vars`; the
/// result lives in `target`, whose variables are the remaining ones in order.
MultiPoly substitute(const MultiPoly& f, const std::vector<std::size_t>& vars, const QVector& values,
                     const RingPtr& target);

/// Maps variable j of f to variable image[j] of `target`.
MultiPoly relabel(const MultiPoly& f, const std::vector<std::size_t>& image, const RingPtr& target);

/// Evaluates f(g_1, ..., g_n) with all g_j in `target`.
MultiPoly compose(const MultiPoly& f, const std::vector<MultiPoly>& images, const RingPtr& target);

}  // namespace torideg
