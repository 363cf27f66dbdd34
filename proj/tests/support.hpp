#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "torideg/groebner.hpp"
#include "torideg/io.hpp"
#include "torideg/poly.hpp"

namespace torideg::test {

/// Deterministic generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long bound = 9) {
    long den = integer(1, bound);
    Rational q(integer(-bound, bound), den);
    q.canonicalize();
    return q;
  }

  Rational nonzero_rational(long bound = 9) {
    Rational q;
    do q = rational(bound);
    while (q == 0);
    return q;
  }

  QVector rational_vector(std::size_t n, long bound = 9) {
    QVector v(n);
    for (auto& x : v) x = rational(bound);
    return v;
  }

  ZVector integer_vector(std::size_t n, long lo, long hi) {
    ZVector v(n);
    for (auto& x : v) x = integer(lo, hi);
    return v;
  }

  /// Monomial of the given total degree in n variables.
  Monomial monomial_of_degree(std::size_t n, long degree) {
    Monomial m(n);
    for (long k = 0; k < degree; ++k) m[integer(0, static_cast<long>(n) - 1)] += 1;
    return m;
  }

  /// Polynomial with up to `terms` terms of total degree <= max_degree.
  MultiPoly polynomial(const RingPtr& ring, std::size_t terms, long max_degree) {
    std::vector<MultiPoly::Term> ts;
    for (std::size_t k = 0; k < terms; ++k)
      ts.emplace_back(monomial_of_degree(ring->nvars(), integer(0, max_degree)), nonzero_rational());
    return MultiPoly::from_terms(ring, std::move(ts));
  }

  /// Nonzero polynomial homogeneous of the given degree (single grading row of ones).
  MultiPoly homogeneous(const RingPtr& ring, std::size_t terms, long degree) {
    MultiPoly f(ring);
    while (f.is_zero()) {
      std::vector<MultiPoly::Term> ts;
      for (std::size_t k = 0; k < terms; ++k)
        ts.emplace_back(monomial_of_degree(ring->nvars(), degree), nonzero_rational());
      f = MultiPoly::from_terms(ring, std::move(ts));
    }
    return f;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline RingPtr curve_ring() { return Ring::standard({"x", "y", "z"}); }

inline Ideal curve_ideal() { return parse_ideal("ring x,y,z\ny^2*z - x^3 + z^3\n"); }

inline MultiPoly P(const std::string& text, const RingPtr& ring) { return parse_poly(text, ring); }

inline QVector Q(std::initializer_list<long> xs) {
  QVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline ZVector Z(std::initializer_list<long> xs) {
  ZVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace torideg::test
