#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace torideg {

using Exponent = std::int32_t;

/// Exponent vector of a monomial x^a. The built-in comparison operators are
/// plain lexicographic on the vector and only serve as a storage key; use a
/// TermOrder for mathematical comparisons.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial unit(std::size_t nvars, std::size_t var, Exponent power = 1);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  Exponent& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<Exponent>& exponents() const { return exps_; }

  long total_degree() const;
  bool is_one() const;

  /// True if this divides other.
  bool divides(const Monomial& other) const;
  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

/// Polynomial ring k[x_1..x_n] over the rationals with a positive multigrading
/// D (m rows, n columns; column j is the multidegree of x_j).
class Ring {
 public:
  using Grading = std::vector<std::vector<long>>;

  static RingPtr make(std::vector<std::string> names, Grading grading);
  /// Standard grading: a single row of ones.
  static RingPtr standard(std::vector<std::string> names);

  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  const Grading& grading() const { return grading_; }
  std::size_t grading_rows() const { return grading_.size(); }
  std::vector<long> degree_of(const Monomial& m) const;
  std::vector<long> degree_of_var(std::size_t j) const;
  /// Sum of the grading rows: strictly positive on every variable.
  const std::vector<long>& positive_weight() const { return positive_weight_; }

  /// Ring with extra variables appended and a replacement grading covering
  /// all n + k variables.
  RingPtr extend(const std::vector<std::string>& extra_names, const Grading& new_grading) const;

  bool operator==(const Ring& other) const;

 private:
  Ring(std::vector<std::string> names, Grading grading);

  std::vector<std::string> names_;
  Grading grading_;
  std::vector<long> positive_weight_;
};

bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace torideg
