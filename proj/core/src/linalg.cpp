#include "torideg/linalg.hpp"

#include <algorithm>

#include <utility>

#include "torideg/error.hpp"

namespace torideg {

Rref rref(QMatrix A, std::size_t ncols) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < A.size(); ++c) {
    std::size_t p = r;
    while (p < A.size() && A[p][c] == 0) ++p;
    if (p == A.size()) continue;
    std::swap(A[r], A[p]);
    Rational inv = 1 / A[r][c];
    for (std::size_t j = c; j < ncols; ++j) A[r][j] *= inv;
    for (std::size_t i = 0; i < A.size(); ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rational f = A[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (A[r][j] != 0) A[i][j] -= f * A[r][j];
    }
    out.pivots.push_back(c);
    ++r;
  }
  A.resize(r);
  out.rows = std::move(A);
  return out;
}

std::size_t rank(const QMatrix& A, std::size_t ncols) { return rref(A, ncols).pivots.size(); }

QMatrix nullspace(const QMatrix& A, std::size_t ncols) {
  Rref R = rref(A, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : R.pivots) is_pivot[p] = true;
  QMatrix basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    QVector v(ncols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < R.pivots.size(); ++i) v[R.pivots[i]] = -R.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<QVector> solve(const QMatrix& A, const QVector& b, std::size_t ncols) {
  QMatrix aug = A;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  Rref R = rref(std::move(aug), ncols + 1);
  QVector x(ncols, 0);
  for (std::size_t i = 0; i < R.pivots.size(); ++i) {
    if (R.pivots[i] == ncols) return std::nullopt;
    x[R.pivots[i]] = R.rows[i][ncols];
  }
  return x;
}

Rational determinant(QMatrix A) {
  const std::size_t n = A.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && A[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(A[p], A[c]);
      det = -det;
    }
    det *= A[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (A[i][c] == 0) continue;
      Rational f = A[i][c] / A[c][c];
      for (std::size_t j = c; j < n; ++j) A[i][j] -= f * A[c][j];
    }
  }
  return det;
}

bool in_span(const QMatrix& A, const QVector& v, std::size_t ncols) {
  QVector r = reduce_mod(rref(A, ncols), v);
  for (const auto& x : r)
    if (x != 0) return false;
  return true;
}

QVector reduce_mod(const Rref& basis, QVector v) {
  for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
    Rational f = v[basis.pivots[i]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * basis.rows[i][j];
  }
  return v;
}

ZMatrix hermite_normal_form(ZMatrix A, std::size_t ncols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < A.size(); ++c) {
    // Euclid on column c among rows r.. until a single nonzero remains.
    for (;;) {
      std::size_t best = A.size();
      for (std::size_t i = r; i < A.size(); ++i)
        if (A[i][c] != 0 && (best == A.size() || abs(A[i][c]) < abs(A[best][c]))) best = i;
      if (best == A.size()) break;
      std::swap(A[r], A[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < A.size(); ++i) {
        if (A[i][c] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), A[i][c].get_mpz_t(), A[r][c].get_mpz_t());
        for (std::size_t j = c; j < ncols; ++j) A[i][j] -= q * A[r][j];
        if (A[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (r == A.size() || A[r][c] == 0) continue;
    if (A[r][c] < 0)
      for (auto& x : A[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), A[i][c].get_mpz_t(), A[r][c].get_mpz_t());
      if (q != 0)
        for (std::size_t j = c; j < ncols; ++j) A[i][j] -= q * A[r][j];
    }
    ++r;
  }
  A.resize(r);
  return A;
}

ZMatrix integer_kernel(const ZMatrix& A, std::size_t ncols) {
  // Column-reduce [A; I]: the identity part of zero columns spans the kernel.
  const std::size_t m = A.size();
  ZMatrix cols(ncols, ZVector(m + ncols, 0));
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < m; ++i) cols[j][i] = A[i][j];
    cols[j][m + j] = 1;
  }
  std::size_t start = 0;
  for (std::size_t i = 0; i < m && start < ncols; ++i) {
    for (;;) {
      std::size_t best = ncols;
      for (std::size_t j = start; j < ncols; ++j)
        if (cols[j][i] != 0 && (best == ncols || abs(cols[j][i]) < abs(cols[best][i]))) best = j;
      if (best == ncols) break;
      std::swap(cols[start], cols[best]);
      bool done = true;
      for (std::size_t j = start + 1; j < ncols; ++j) {
        if (cols[j][i] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), cols[j][i].get_mpz_t(), cols[start][i].get_mpz_t());
        for (std::size_t k = 0; k < m + ncols; ++k) cols[j][k] -= q * cols[start][k];
        if (cols[j][i] != 0) done = false;
      }
      if (done) {
        ++start;
        break;
      }
    }
  }
  ZMatrix kernel;
  for (std::size_t j = start; j < ncols; ++j) kernel.emplace_back(cols[j].begin() + m, cols[j].end());
  return hermite_normal_form(std::move(kernel), ncols);
}

ZMatrix to_integer_rows(const QMatrix& A) {
  ZMatrix out;
  out.reserve(A.size());
  for (const auto& row : A) out.push_back(primitive(row));
  return out;
}

ZMatrix to_integer_rows_exact(const QMatrix& M) {
  ZMatrix out;
  for (const auto& r : M) {
    bool integral = std::all_of(r.begin(), r.end(), [](const Rational& x) { return x.get_den() == 1; });
    if (integral) {
      ZVector z;
      for (const auto& x : r) z.push_back(x.get_num());
      out.push_back(std::move(z));
    } else {
      out.push_back(primitive(r));
    }
  }
  return out;
}

}  // namespace torideg
