#include "torideg/orders.hpp"

#include <cctype>
#include <climits>

#include "torideg/error.hpp"
#include "torideg/linalg.hpp"
#include "torideg/lp.hpp"

namespace torideg {

namespace {

std::vector<long> integer_row(const QVector& row) {
  Integer den = 1;
  for (const auto& q : row) den = lcm(den, Integer(q.get_den()));
  std::vector<long> out;
  out.reserve(row.size());
  for (const auto& q : row) {
    Integer z = Integer(q * den);
    if (!z.fits_sint_p() || abs(z) > INT_MAX) throw LimitError("order weight too large: " + z.get_str());
    out.push_back(z.get_si());
  }
  return out;
}

OrderRow sparse(const std::vector<long>& dense, std::size_t offset) {
  OrderRow r;
  for (std::size_t j = 0; j < dense.size(); ++j)
    if (dense[j] != 0) r.entries.emplace_back(offset + j, dense[j]);
  return r;
}

}  // namespace

CompiledOrder::CompiledOrder(std::size_t nvars, std::vector<OrderRow> rows) : nvars_(nvars), rows_(std::move(rows)) {
  QMatrix dense;
  for (const auto& r : rows_) {
    QVector v(nvars_, 0);
    for (const auto& [j, c] : r.entries) v[j] = c;
    dense.push_back(std::move(v));
  }
  total_ = rank(dense, nvars_) == nvars_;
  well_ = true;
  for (std::size_t j = 0; j < nvars_ && well_; ++j) {
    bool decided = false;
    for (const auto& row : dense)
      if (row[j] != 0) {
        well_ = row[j] > 0;
        decided = true;
        break;
      }
    if (!decided) well_ = false;
  }
}

CompiledOrder CompiledOrder::prefixed(const std::vector<long>& row) const {
  std::vector<OrderRow> rows;
  rows.push_back(sparse(row, 0));
  rows.insert(rows.end(), rows_.begin(), rows_.end());
  return CompiledOrder(nvars_, std::move(rows));
}

TermOrder TermOrder::lex() { return TermOrder(Kind::lex); }
TermOrder TermOrder::grevlex() { return TermOrder(Kind::grevlex); }

TermOrder TermOrder::weighted(QVector w, std::optional<TermOrder> tie) {
  TermOrder o(Kind::weighted);
  o.rows_.push_back(std::move(w));
  if (tie) o.tie_ = std::make_shared<const TermOrder>(std::move(*tie));
  return o;
}

TermOrder TermOrder::matrix(QMatrix rows, std::optional<TermOrder> tie) {
  if (rows.empty()) throw DomainError("matrix order needs at least one row");
  TermOrder o(Kind::matrix);
  o.rows_ = std::move(rows);
  if (tie) o.tie_ = std::make_shared<const TermOrder>(std::move(*tie));
  return o;
}

TermOrder TermOrder::block(std::size_t k, TermOrder head, TermOrder tail) {
  TermOrder o(Kind::block);
  o.block_size_ = k;
  o.tie_ = std::make_shared<const TermOrder>(std::move(head));
  o.tail_ = std::make_shared<const TermOrder>(std::move(tail));
  return o;
}

void TermOrder::append_rows(std::size_t offset, std::size_t nvars, std::size_t total,
                            std::vector<OrderRow>& out) const {
  switch (kind_) {
    case Kind::lex:
      for (std::size_t j = 0; j < nvars; ++j) out.push_back(OrderRow{{{offset + j, 1}}});
      return;
    case Kind::grevlex:
      out.push_back(sparse(std::vector<long>(nvars, 1), offset));
      for (std::size_t j = nvars; j-- > 1;) out.push_back(OrderRow{{{offset + j, -1}}});
      return;
    case Kind::weighted:
    case Kind::matrix:
      for (const auto& row : rows_) {
        if (row.size() != nvars)
          throw DomainError("order weight length " + std::to_string(row.size()) + " differs from " +
                            std::to_string(nvars) + " variables");
        out.push_back(sparse(integer_row(row), offset));
      }
      if (tie_) tie_->append_rows(offset, nvars, total, out);
      return;
    case Kind::block:
      if (block_size_ > nvars) throw DomainError("block size exceeds variable count");
      tie_->append_rows(offset, block_size_, total, out);
      tail_->append_rows(offset + block_size_, nvars - block_size_, total, out);
      return;
  }
}

CompiledOrder TermOrder::compile(std::size_t nvars) const {
  std::vector<OrderRow> rows;
  append_rows(0, nvars, nvars, rows);
  return CompiledOrder(nvars, std::move(rows));
}

Cmp TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw DomainError("monomial dimension mismatch");
  return compile(a.size()).compare(a, b);
}

Cmp cmp_monomials(const TermOrder& order, const Monomial& a, const Monomial& b) { return order.compare(a, b); }

namespace {

std::string vec_string(const QVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + "]";
}

}  // namespace

std::string TermOrder::to_string() const {
  std::string s;
  switch (kind_) {
    case Kind::lex: return "lex";
    case Kind::grevlex: return "grevlex";
    case Kind::weighted: s = "weight " + vec_string(rows_[0]); break;
    case Kind::matrix: {
      s = "matrix [";
      for (std::size_t i = 0; i < rows_.size(); ++i) s += (i ? "," : "") + vec_string(rows_[i]);
      s += "]";
      break;
    }
    case Kind::block:
      return "block " + std::to_string(block_size_) + " (" + tie_->to_string() + ") (" + tail_->to_string() + ")";
  }
  if (tie_) s += " tie " + tie_->to_string();
  return s;
}

// ---------------------------------------------------------------------------
// Descriptor parsing

namespace {

class OrderParser {
 public:
  explicit OrderParser(std::string_view text) : text_(text) {}

  TermOrder parse_all() {
    TermOrder o = order();
    skip();
    if (pos_ != text_.size()) fail("trailing input");
    return o;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("order descriptor: " + what + " in '" + std::string(text_) + "'");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }
  Rational number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-' ||
                                   text_[pos_] == '+' || text_[pos_] == '/'))
      ++pos_;
    if (start == pos_) fail("expected a number");
    return parse_rational(text_.substr(start, pos_ - start));
  }
  QVector vec() {
    expect('[');
    QVector v;
    if (peek(']')) fail("empty weight vector");
    for (;;) {
      v.push_back(number());
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(']');
      return v;
    }
  }
  std::optional<TermOrder> maybe_tie() {
    std::size_t save = pos_;
    if (word() == "tie") return order();
    pos_ = save;
    return std::nullopt;
  }
  TermOrder order() {
    std::string w = word();
    if (w == "lex") return TermOrder::lex();
    if (w == "grevlex") return TermOrder::grevlex();
    if (w == "weight") {
      QVector v = vec();
      return TermOrder::weighted(std::move(v), maybe_tie());
    }
    if (w == "matrix") {
      expect('[');
      QMatrix rows;
      for (;;) {
        rows.push_back(vec());
        if (peek(',')) {
          ++pos_;
          continue;
        }
        expect(']');
        break;
      }
      for (const auto& r : rows)
        if (r.size() != rows[0].size()) fail("ragged matrix");
      return TermOrder::matrix(std::move(rows), maybe_tie());
    }
    if (w == "block") {
      Rational k = number();
      if (k.get_den() != 1 || k < 0) fail("block size must be a nonnegative integer");
      expect('(');
      TermOrder head = order();
      expect(')');
      expect('(');
      TermOrder tail = order();
      expect(')');
      return TermOrder::block(k.get_num().get_ui(), std::move(head), std::move(tail));
    }
    fail(w.empty() ? "missing order name" : "unknown order '" + w + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

TermOrder TermOrder::parse(std::string_view text) { return OrderParser(text).parse_all(); }

// ---------------------------------------------------------------------------

ZdOrder::ZdOrder(QMatrix rows) : rows_(std::move(rows)) {
  if (rows_.empty()) return;
  const std::size_t d = rows_[0].size();
  for (const auto& r : rows_)
    if (r.size() != d) throw DomainError("ragged order matrix on Z^d");
  if (rank(rows_, d) != d) throw DomainError("order rows on Z^d do not span");
}

ZdOrder ZdOrder::lex(std::size_t) { return ZdOrder(); }

Cmp ZdOrder::compare(const QVector& u, const QVector& v) const {
  if (u.size() != v.size()) throw DomainError("Z^d comparison of vectors with different lengths");
  if (rows_.empty()) {
    for (std::size_t i = 0; i < u.size(); ++i)
      if (u[i] != v[i]) return u[i] > v[i] ? Cmp::gt : Cmp::lt;
    return Cmp::eq;
  }
  if (rows_[0].size() != u.size()) throw DomainError("Z^d order dimension mismatch");
  for (const auto& r : rows_) {
    Rational x = dot(r, u), y = dot(r, v);
    if (x != y) return x > y ? Cmp::gt : Cmp::lt;
  }
  return Cmp::eq;
}

Cmp cmp_zd(const ZdOrder& order, const QVector& u, const QVector& v) { return order.compare(u, v); }

QVector WeightingMatrix::apply(const Monomial& a) const {
  QVector out(M.size(), 0);
  for (std::size_t i = 0; i < M.size(); ++i) {
    if (M[i].size() != a.size()) throw DomainError("weighting matrix width differs from variable count");
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a[j] != 0) out[i] += M[i][j] * a[j];
  }
  return out;
}

ZVector separating_weight(const std::vector<std::pair<Monomial, Monomial>>& pairs, std::size_t nvars) {
  LinearProgram lp(nvars);
  lp.nonneg.assign(nvars, true);
  lp.objective.assign(nvars, 1);
  for (std::size_t j = 0; j < nvars; ++j) {
    QVector e(nvars, 0);
    e[j] = 1;
    lp.add(std::move(e), LinearProgram::Rel::ge, 1);
  }
  for (const auto& [a, b] : pairs) {
    if (a.size() != nvars || b.size() != nvars) throw DomainError("monomial dimension mismatch");
    QVector diff(nvars);
    for (std::size_t j = 0; j < nvars; ++j) diff[j] = a[j] - b[j];
    lp.add(std::move(diff), LinearProgram::Rel::ge, 1);
  }
  LpResult r = solve_lp(lp);
  if (!r.optimal()) throw DomainError("no positive weight separates the given pairs");
  return primitive(r.x);
}

ZVector representing_weight(const TermOrder& order, const std::vector<std::pair<Monomial, Monomial>>& pairs,
                            std::size_t nvars) {
  for (const auto& [a, b] : pairs) {
    if (a.size() != nvars || b.size() != nvars) throw DomainError("monomial dimension mismatch");
    if (order.compare(a, b) != Cmp::gt) throw DomainError("pair is not ordered by the given term order");
  }
  return separating_weight(pairs, nvars);
}

}  // namespace torideg
