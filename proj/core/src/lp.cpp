#include "torideg/lp.hpp"

#include "torideg/error.hpp"

namespace torideg {

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : T_(rows, QVector(cols + 1, 0)), basis_(rows, 0), cols_(cols) {}

  QVector& row(std::size_t i) { return T_[i]; }
  std::size_t& basis(std::size_t i) { return basis_[i]; }
  std::size_t rows() const { return T_.size(); }

  void pivot(std::size_t r, std::size_t c, QVector& obj) {
    Rational inv = 1 / T_[r][c];
    for (auto& x : T_[r])
      if (x != 0) x *= inv;
    for (std::size_t i = 0; i < T_.size(); ++i)
      if (i != r) eliminate(T_[i], r, c);
    eliminate(obj, r, c);
    basis_[r] = c;
  }

  /// Minimizes over the active columns [0, limit). Returns false if unbounded.
  bool optimize(QVector& obj, std::size_t limit) {
    for (;;) {
      std::size_t enter = limit;
      for (std::size_t j = 0; j < limit; ++j)
        if (obj[j] < 0) {
          enter = j;
          break;
        }
      if (enter == limit) return true;
      std::size_t leave = rows();
      Rational best;
      for (std::size_t i = 0; i < rows(); ++i) {
        if (T_[i][enter] <= 0) continue;
        Rational ratio = T_[i][cols_] / T_[i][enter];
        if (leave == rows() || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows()) return false;
      pivot(leave, enter, obj);
    }
  }

  void drop_row(std::size_t i) {
    T_.erase(T_.begin() + static_cast<long>(i));
    basis_.erase(basis_.begin() + static_cast<long>(i));
  }

  const Rational& rhs(std::size_t i) const { return T_[i][cols_]; }
  std::size_t cols() const { return cols_; }

 private:
  void eliminate(QVector& target, std::size_t r, std::size_t c) {
    if (target[c] == 0) return;
    Rational f = target[c];
    for (std::size_t j = 0; j <= cols_; ++j)
      if (T_[r][j] != 0) target[j] -= f * T_[r][j];
  }

  std::vector<QVector> T_;
  std::vector<std::size_t> basis_;
  std::size_t cols_;
};

}  // namespace

LpResult solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.nvars;
  for (const auto& c : lp.constraints)
    if (c.a.size() != n) throw DomainError("LP constraint length differs from variable count");
  if (lp.objective.size() != n) throw DomainError("LP objective length differs from variable count");

  // Column layout: x+ (n), x- for free variables, one slack per inequality, one artificial per row.
  std::vector<long> neg_col(n, -1);
  std::size_t col = n;
  for (std::size_t j = 0; j < n; ++j)
    if (!lp.nonneg[j]) neg_col[j] = static_cast<long>(col++);
  const std::size_t m = lp.constraints.size();
  std::vector<long> slack_col(m, -1);
  for (std::size_t i = 0; i < m; ++i)
    if (lp.constraints[i].rel != LinearProgram::Rel::eq) slack_col[i] = static_cast<long>(col++);
  const std::size_t structural = col;
  const std::size_t total = structural + m;

  Tableau tab(m, total);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = lp.constraints[i];
    QVector& r = tab.row(i);
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = c.a[j];
      if (neg_col[j] >= 0) r[neg_col[j]] = -c.a[j];
    }
    if (slack_col[i] >= 0) r[slack_col[i]] = c.rel == LinearProgram::Rel::le ? 1 : -1;
    r[total] = c.b;
    if (c.b < 0)
      for (auto& x : r) x = -x;
    r[structural + i] = 1;
    tab.basis(i) = structural + i;
  }

  // Phase 1: minimize the sum of artificials.
  QVector obj(total + 1, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= total; ++j)
      if (j < structural || j == total) obj[j] -= tab.row(i)[j];
  tab.optimize(obj, total);
  LpResult result;
  if (obj[total] != 0) {
    result.status = LpResult::Status::infeasible;
    return result;
  }
  // Drive artificials out of the basis or drop redundant rows.
  for (std::size_t i = 0; i < tab.rows();) {
    if (tab.basis(i) < structural) {
      ++i;
      continue;
    }
    std::size_t c = structural;
    for (std::size_t j = 0; j < structural; ++j)
      if (tab.row(i)[j] != 0) {
        c = j;
        break;
      }
    if (c == structural) {
      tab.drop_row(i);
    } else {
      tab.pivot(i, c, obj);
      ++i;
    }
  }

  // Phase 2 on structural columns.
  QVector cost(total + 1, 0);
  for (std::size_t j = 0; j < n; ++j) {
    Rational cj = lp.maximize ? Rational(-lp.objective[j]) : lp.objective[j];
    cost[j] = cj;
    if (neg_col[j] >= 0) cost[neg_col[j]] = -cj;
  }
  for (std::size_t i = 0; i < tab.rows(); ++i) {
    Rational cb = cost[tab.basis(i)];
    if (cb == 0) continue;
    for (std::size_t j = 0; j <= total; ++j)
      if (tab.row(i)[j] != 0) cost[j] -= cb * tab.row(i)[j];
  }
  if (!tab.optimize(cost, structural)) {
    result.status = LpResult::Status::unbounded;
    return result;
  }

  QVector full(total, 0);
  for (std::size_t i = 0; i < tab.rows(); ++i) full[tab.basis(i)] = tab.rhs(i);
  result.x.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    result.x[j] = full[j];
    if (neg_col[j] >= 0) result.x[j] -= full[neg_col[j]];
  }
  result.value = dot(lp.objective, result.x);
  result.status = LpResult::Status::optimal;
  return result;
}

bool feasible(const LinearProgram& lp) {
  LinearProgram copy = lp;
  std::fill(copy.objective.begin(), copy.objective.end(), Rational(0));
  return solve_lp(copy).status != LpResult::Status::infeasible;
}

}  // namespace torideg
