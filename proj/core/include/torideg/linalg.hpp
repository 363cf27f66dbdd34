#pragma once

#include <optional>
#include <vector>

#include "torideg/rational.hpp"

namespace torideg {

/// Reduced row echelon form; zero rows dropped.
struct Rref {
  QMatrix rows;
  std::vector<std::size_t> pivots;
};

Rref rref(QMatrix A, std::size_t ncols);
std::size_t rank(const QMatrix& A, std::size_t ncols);

/// Basis of {x : A x = 0}, one vector per free column.
QMatrix nullspace(const QMatrix& A, std::size_t ncols);

/// Some x with A x = b, or nullopt.
std::optional<QVector> solve(const QMatrix& A, const QVector& b, std::size_t ncols);

Rational determinant(QMatrix A);

/// True if v lies in the row space of A.
bool in_span(const QMatrix& A, const QVector& v, std::size_t ncols);

/// Reduces v modulo the row space of an Rref basis (clears pivot columns).
QVector reduce_mod(const Rref& basis, QVector v);

/// Row Hermite normal form of the lattice spanned by the rows; zero rows dropped.
ZMatrix hermite_normal_form(ZMatrix A, std::size_t ncols);

/// Lattice basis of {x in Z^n : A x = 0}.
ZMatrix integer_kernel(const ZMatrix& A, std::size_t ncols);

/// Integer rows spanning the same rational space, each primitive.
ZMatrix to_integer_rows(const QMatrix& A);

/// Integer rows: integral rows unchanged, other rows scaled to be primitive.
ZMatrix to_integer_rows_exact(const QMatrix& A);

}  // namespace torideg
