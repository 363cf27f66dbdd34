#include "torideg/ring.hpp"

#include <cctype>
#include <set>

#include "torideg/error.hpp"

namespace torideg {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_)
    if (e < 0) throw DomainError("negative exponent in monomial");
}

Monomial Monomial::unit(std::size_t nvars, std::size_t var, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(var) = power;
  return m;
}

long Monomial::total_degree() const {
  long d = 0;
  for (Exponent e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  for (Exponent e : exps_)
    if (e != 0) return false;
  return true;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = other.exps_[i] - exps_[i];
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) l.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > 0 && other.exps_[i] > 0) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (exps_.size() != other.exps_.size()) throw DomainError("monomial dimension mismatch");
  Monomial p(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (__builtin_add_overflow(exps_[i], other.exps_[i], &p.exps_[i]))
      throw LimitError("exponent overflow");
  return p;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : m.exponents()) h = (h ^ static_cast<std::size_t>(e)) * 1099511628211ull;
  return h;
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

}  // namespace

Ring::Ring(std::vector<std::string> names, Grading grading)
    : names_(std::move(names)), grading_(std::move(grading)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!valid_identifier(n)) throw DomainError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw DomainError("duplicate variable name '" + n + "'");
  }
  if (grading_.empty()) throw DomainError("ring grading needs at least one row");
  positive_weight_.assign(names_.size(), 0);
  for (const auto& row : grading_) {
    if (row.size() != names_.size()) throw DomainError("grading row length differs from variable count");
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 0) throw DomainError("grading has a negative entry");
      positive_weight_[j] += row[j];
    }
  }
  for (std::size_t j = 0; j < names_.size(); ++j)
    if (positive_weight_[j] == 0) throw DomainError("variable '" + names_[j] + "' has zero degree");
}

RingPtr Ring::make(std::vector<std::string> names, Grading grading) {
  return RingPtr(new Ring(std::move(names), std::move(grading)));
}

RingPtr Ring::standard(std::vector<std::string> names) {
  Grading g{std::vector<long>(names.size(), 1)};
  return make(std::move(names), std::move(g));
}

std::optional<std::size_t> Ring::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::vector<long> Ring::degree_of(const Monomial& m) const {
  std::vector<long> d(grading_.size(), 0);
  for (std::size_t r = 0; r < grading_.size(); ++r)
    for (std::size_t j = 0; j < names_.size(); ++j) d[r] += grading_[r][j] * m[j];
  return d;
}

std::vector<long> Ring::degree_of_var(std::size_t j) const {
  std::vector<long> d;
  for (const auto& row : grading_) d.push_back(row[j]);
  return d;
}

RingPtr Ring::extend(const std::vector<std::string>& extra_names, const Grading& new_grading) const {
  auto names = names_;
  names.insert(names.end(), extra_names.begin(), extra_names.end());
  return make(std::move(names), new_grading);
}

bool Ring::operator==(const Ring& other) const {
  return names_ == other.names_ && grading_ == other.grading_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace torideg
