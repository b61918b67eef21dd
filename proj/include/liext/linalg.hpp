#ifndef LIEXT_LINALG_HPP
#define LIEXT_LINALG_HPP

#include <cstddef>
#include <vector>

#include "liext/matrix.hpp"

namespace liext {

struct RrefResult {
  Matrix m;
  std::vector<std::size_t> pivots;  // pivot column indices, one per nonzero row
};

/// Reduced row echelon form by exact Gauss-Jordan elimination.
inline RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(p, c));
    Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// Basis of the exact null space; size = cols - rank.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
  RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Exact determinant via fraction-free Bareiss elimination.
inline Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Matrix a = m;
  Rational prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  Rational d = a(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

/// Exact inverse via Gauss-Jordan on [m | I].
inline Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse: matrix not square");
  const std::size_t n = m.rows();
  RrefResult r = rref(Matrix::hstack(m, Matrix::identity(n)));
  if (r.pivots.size() != n || (n > 0 && r.pivots.back() >= n))
    throw SingularMatrixError("inverse: matrix not invertible");
  return r.m.block(0, n, n, n);
}

/// Canonical (echelon) basis of the span of the given columns, as matrix columns.
inline Matrix column_space_basis(const Matrix& m) {
  RrefResult r = rref(m.transpose());
  Matrix basis(m.rows(), r.pivots.size());
  for (std::size_t i = 0; i < r.pivots.size(); ++i)
    for (std::size_t c = 0; c < m.rows(); ++c) basis(c, i) = r.m(i, c);
  return basis;
}

}  // namespace liext

#endif
