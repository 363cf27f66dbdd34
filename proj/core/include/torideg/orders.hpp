#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torideg/rational.hpp"
#include "torideg/ring.hpp"

namespace torideg {

enum class Cmp { lt = -1, eq = 0, gt = 1 };

/// One row of a compiled order: sparse integer weights.
struct OrderRow {
  std::vector<std::pair<std::size_t, long>> entries;
  long apply(const Monomial& m) const {
    long s = 0;
    for (const auto& [j, c] : entries) s += c * m[j];
    return s;
  }
};

/// Term order flattened to integer rows, compared first-separating-row wins.
/// Built by TermOrder::compile for a fixed number of variables.
class CompiledOrder {
 public:
  CompiledOrder() = default;
  CompiledOrder(std::size_t nvars, std::vector<OrderRow> rows);

  Cmp compare(const Monomial& a, const Monomial& b) const {
    for (const auto& r : rows_) {
      long x = r.apply(a), y = r.apply(b);
      if (x != y) return x > y ? Cmp::gt : Cmp::lt;
    }
    return Cmp::eq;
  }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::gt; }

  std::size_t nvars() const { return nvars_; }
  const std::vector<OrderRow>& rows() const { return rows_; }
  /// Rows span Q^n, so distinct monomials never compare equal.
  bool total() const { return total_; }
  /// 1 < x_j for every variable (implies a well-order when total).
  bool well_order() const { return well_; }
  /// New order with `row` placed in front.
  CompiledOrder prefixed(const std::vector<long>& row) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<OrderRow> rows_;
  bool total_ = false;
  bool well_ = false;
};

/// Monomial order descriptor. Weighted and matrix orders may carry a tie-break;
/// without one they can leave distinct monomials tied.
class TermOrder {
 public:
  enum class Kind { lex, grevlex, weighted, matrix, block };

  static TermOrder lex();
  static TermOrder grevlex();
  static TermOrder weighted(QVector w, std::optional<TermOrder> tie = std::nullopt);
  static TermOrder matrix(QMatrix rows, std::optional<TermOrder> tie = std::nullopt);
  /// First `k` variables compared by `head`; ties broken on the rest by `tail`.
  static TermOrder block(std::size_t k, TermOrder head, TermOrder tail);

  /// Parses `lex`, `grevlex`, `weight [2,3,0] tie grevlex`,
  /// `matrix [[1,1,1],[2,3,0]] tie lex`, `block 2 (grevlex) (lex)`.
  static TermOrder parse(std::string_view text);

  Kind kind() const { return kind_; }
  const QMatrix& rows() const { return rows_; }
  const TermOrder* tie() const { return tie_.get(); }

  CompiledOrder compile(std::size_t nvars) const;
  Cmp compare(const Monomial& a, const Monomial& b) const;
  std::string to_string() const;

  friend bool operator==(const TermOrder& a, const TermOrder& b) { return a.to_string() == b.to_string(); }

 private:
  TermOrder(Kind k) : kind_(k) {}
  void append_rows(std::size_t offset, std::size_t nvars, std::size_t total, std::vector<OrderRow>& out) const;

  Kind kind_;
  QMatrix rows_;
  std::size_t block_size_ = 0;
  std::shared_ptr<const TermOrder> tie_;
  std::shared_ptr<const TermOrder> tail_;
};

Cmp cmp_monomials(const TermOrder& order, const Monomial& a, const Monomial& b);

/// Order on Z^d (or Q^d) given by rational rows; default lex.
class ZdOrder {
 public:
  ZdOrder() = default;
  explicit ZdOrder(QMatrix rows);
  static ZdOrder lex(std::size_t d);

  Cmp compare(const QVector& u, const QVector& v) const;
  bool is_lex() const { return rows_.empty(); }
  const QMatrix& rows() const { return rows_; }

 private:
  QMatrix rows_;  // empty means lex in any dimension
};

Cmp cmp_zd(const ZdOrder& order, const QVector& u, const QVector& v);

/// Weighting matrix M (d x n) with the order used to compare its values.
struct WeightingMatrix {
  QMatrix M;
  ZdOrder order;

  std::size_t rows() const { return M.size(); }
  QVector apply(const Monomial& a) const;
};

/// Strictly positive integer w with w.a > w.b for every pair (a, b), of
/// least coordinate sum among rational solutions before clearing denominators.
ZVector separating_weight(const std::vector<std::pair<Monomial, Monomial>>& pairs, std::size_t nvars);

/// Strictly positive integer w with w.a > w.b for every pair; pairs are
/// assumed to be ordered a > b by `order`, which is checked.
ZVector representing_weight(const TermOrder& order, const std::vector<std::pair<Monomial, Monomial>>& pairs,
                            std::size_t nvars);

}  // namespace torideg
