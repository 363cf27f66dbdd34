#pragma once

#include <vector>

#include "torideg/rational.hpp"

namespace torideg {

/// Exact linear program: optimize objective . x subject to linear constraints.
/// Variables are free unless marked nonnegative.
struct LinearProgram {
  enum class Rel { le, ge, eq };
  struct Constraint {
    QVector a;
    Rel rel;
    Rational b;
  };

  explicit LinearProgram(std::size_t n) : nvars(n), nonneg(n, false), objective(n, 0) {}

  void add(QVector a, Rel rel, Rational b) { constraints.push_back({std::move(a), rel, std::move(b)}); }

  std::size_t nvars;
  std::vector<Constraint> constraints;
  std::vector<bool> nonneg;
  QVector objective;
  bool maximize = false;
};

struct LpResult {
  enum class Status { optimal, infeasible, unbounded };
  Status status = Status::infeasible;
  Rational value;
  QVector x;

  bool optimal() const { return status == Status::optimal; }
};

/// Two-phase simplex over the rationals with Bland's rule.
LpResult solve_lp(const LinearProgram& lp);

/// Feasibility only (objective ignored).
bool feasible(const LinearProgram& lp);

}  // namespace torideg
