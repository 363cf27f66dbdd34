#include "torideg/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "torideg/error.hpp"

namespace torideg {

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

namespace {

void sort_canonical(std::vector<MultiPoly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const auto& s, const auto& t) { return grevlex_greater(s.first, t.first); });
}

void require_same_ring(const MultiPoly& f, const MultiPoly& g) {
  if (!same_ring(f.ring(), g.ring())) throw DomainError("ring mismatch");
}

}  // namespace

MultiPoly MultiPoly::constant(RingPtr ring, const Rational& c) {
  Monomial one(ring->nvars());
  return monomial(std::move(ring), std::move(one), c);
}

MultiPoly MultiPoly::variable(RingPtr ring, std::size_t var) {
  if (var >= ring->nvars()) throw DomainError("variable index out of range");
  auto m = Monomial::unit(ring->nvars(), var);
  return monomial(std::move(ring), std::move(m));
}

MultiPoly MultiPoly::monomial(RingPtr ring, Monomial m, const Rational& c) {
  if (m.size() != ring->nvars()) throw DomainError("monomial length differs from ring size");
  MultiPoly f(std::move(ring));
  if (c != 0) f.terms_.emplace_back(std::move(m), c);
  return f;
}

MultiPoly MultiPoly::from_terms(RingPtr ring, std::vector<Term> terms) {
  std::map<Monomial, Rational> acc;
  for (auto& [m, c] : terms) {
    if (m.size() != ring->nvars()) throw DomainError("monomial length differs from ring size");
    acc[m] += c;
  }
  MultiPoly f(std::move(ring));
  for (auto& [m, c] : acc)
    if (c != 0) f.terms_.emplace_back(m, c);
  sort_canonical(f.terms_);
  return f;
}

Rational MultiPoly::coefficient(const Monomial& m) const {
  for (const auto& [mm, c] : terms_)
    if (mm == m) return c;
  return 0;
}

std::vector<Monomial> MultiPoly::support() const {
  std::vector<Monomial> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.first);
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly f = *this;
  for (auto& t : f.terms_) t.second = -t.second;
  return f;
}

MultiPoly MultiPoly::operator+(const MultiPoly& g) const {
  require_same_ring(*this, g);
  // Merge of two sorted term lists.
  MultiPoly out(ring_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < g.terms_.size()) {
    if (j == g.terms_.size() || (i < terms_.size() && grevlex_greater(terms_[i].first, g.terms_[j].first))) {
      out.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() || grevlex_greater(g.terms_[j].first, terms_[i].first)) {
      out.terms_.push_back(g.terms_[j++]);
    } else {
      Rational c = terms_[i].second + g.terms_[j].second;
      if (c != 0) out.terms_.emplace_back(terms_[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& g) const { return *this + (-g); }

MultiPoly MultiPoly::operator*(const MultiPoly& g) const {
  require_same_ring(*this, g);
  std::map<Monomial, Rational> acc;
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : g.terms_) acc[m1 * m2] += c1 * c2;
  MultiPoly out(ring_);
  for (auto& [m, c] : acc)
    if (c != 0) out.terms_.emplace_back(m, c);
  sort_canonical(out.terms_);
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c == 0) return MultiPoly(ring_);
  MultiPoly f = *this;
  for (auto& t : f.terms_) t.second *= c;
  return f;
}

MultiPoly MultiPoly::times_monomial(const Monomial& m, const Rational& c) const {
  if (c == 0) return MultiPoly(ring_);
  MultiPoly f(ring_);
  f.terms_.reserve(terms_.size());
  // Multiplying by a monomial preserves grevlex order.
  for (const auto& [mm, cc] : terms_) f.terms_.emplace_back(mm * m, cc * c);
  return f;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly result = constant(ring_, 1);
  MultiPoly base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::rebased(RingPtr ring) const {
  if (ring->nvars() != ring_->nvars()) throw DomainError("rebased ring has a different variable count");
  MultiPoly f(std::move(ring));
  f.terms_ = terms_;
  return f;
}

MultiPoly poly_arith(ArithOp op, const MultiPoly& f, const MultiPoly& g) {
  switch (op) {
    case ArithOp::add: return f + g;
    case ArithOp::sub: return f - g;
    case ArithOp::mul: return f * g;
  }
  throw DomainError("unknown arithmetic operation");
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  MultiPoly parse() {
    MultiPoly f = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at column " + std::to_string(pos_ + 1) + ": " + what + " in '" +
                     std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty expression");
    MultiPoly f = term();
    for (;;) {
      if (accept('+'))
        f = f + term();
      else if (accept('-'))
        f = f - term();
      else
        return f;
    }
  }

  MultiPoly term() {
    MultiPoly f = factor();
    for (;;) {
      if (accept('*')) {
        f = f * factor();
      } else if (accept('/')) {
        MultiPoly d = factor();
        if (d.size() != 1 || !d.terms()[0].first.is_one()) fail("division by a non-constant");
        f = f.scaled(1 / d.terms()[0].second);
      } else {
        return f;
      }
    }
  }

  // Unary signs bind looser than '^', so -x^2 is -(x^2).
  MultiPoly factor() {
    if (accept('-')) return -factor();
    if (accept('+')) return factor();
    MultiPoly base = primary();
    if (accept('^')) {
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '-') throw ParseError("negative exponent in '" + std::string(text_) + "'");
      unsigned long k = integer_literal();
      if (k > 1000000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(k));
    }
    return base;
  }

  unsigned long integer_literal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  MultiPoly primary() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly f = expr();
      if (!accept(')')) fail("missing ')'");
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Integer z(std::string(text_.substr(start, pos_ - start)));
      return MultiPoly::constant(ring_, Rational(z));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + name + "' in '" + std::string(text_) + "'");
      return MultiPoly::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string out;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(j);
    if (m[j] > 1) out += '^' + std::to_string(m[j]);
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const MultiPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + '*';
      out += monomial_to_string(m, *f.ring());
    }
  }
  return out;
}

MultidegreeReport multidegree(const MultiPoly& f) {
  if (f.is_zero()) throw DomainError("multidegree of the zero polynomial");
  MultidegreeReport r;
  const auto& ring = *f.ring();
  const Monomial& first = f.terms()[0].first;
  r.degree = ring.degree_of(first);
  for (const auto& [m, c] : f.terms()) {
    if (ring.degree_of(m) != r.degree) {
      r.homogeneous = false;
      r.witnesses = std::make_pair(first, m);
      r.degree.clear();
      break;
    }
  }
  return r;
}

bool is_homogeneous(const MultiPoly& f) { return f.is_zero() || multidegree(f).homogeneous; }

MultiPoly substitute(const MultiPoly& f, const std::vector<std::size_t>& vars, const QVector& values,
                     const RingPtr& target) {
  const std::size_t n = f.ring()->nvars();
  if (vars.size() != values.size()) throw DomainError("substitution arity mismatch");
  std::vector<int> slot(n, -1);
  for (std::size_t k = 0; k < vars.size(); ++k) slot.at(vars[k]) = static_cast<int>(k);
  if (target->nvars() + vars.size() != n) throw DomainError("substitution target ring has the wrong size");
  std::vector<MultiPoly::Term> terms;
  for (const auto& [m, c] : f.terms()) {
    Rational coef = c;
    Monomial rest(target->nvars());
    std::size_t r = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (slot[j] >= 0) {
        if (m[j] > 0) {
          Rational p;
          mpz_class num, den;
          mpz_pow_ui(num.get_mpz_t(), values[slot[j]].get_num_mpz_t(), static_cast<unsigned long>(m[j]));
          mpz_pow_ui(den.get_mpz_t(), values[slot[j]].get_den_mpz_t(), static_cast<unsigned long>(m[j]));
          p = Rational(num, den);
          p.canonicalize();
          coef *= p;
        }
      } else {
        rest[r++] = m[j];
      }
    }
    if (coef != 0) terms.emplace_back(std::move(rest), coef);
  }
  return MultiPoly::from_terms(target, std::move(terms));
}

MultiPoly relabel(const MultiPoly& f, const std::vector<std::size_t>& image, const RingPtr& target) {
  if (image.size() != f.ring()->nvars()) throw DomainError("relabel map has the wrong length");
  std::vector<MultiPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    Monomial out(target->nvars());
    for (std::size_t j = 0; j < m.size(); ++j) out[image[j]] += m[j];
    terms.emplace_back(std::move(out), c);
  }
  return MultiPoly::from_terms(target, std::move(terms));
}

MultiPoly compose(const MultiPoly& f, const std::vector<MultiPoly>& images, const RingPtr& target) {
  if (images.size() != f.ring()->nvars()) throw DomainError("compose needs one image per variable");
  MultiPoly out(target);
  for (const auto& [m, c] : f.terms()) {
    MultiPoly t = MultiPoly::constant(target, c);
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[j] > 0) t = t * images[j].pow(static_cast<unsigned>(m[j]));
    out = out + t;
  }
  return out;
}

}  // namespace torideg
