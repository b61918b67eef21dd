#ifndef LIEXT_MATRIX_HPP
#define LIEXT_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "liext/rational.hpp"

namespace liext {

class Matrix;

/// Dense column vector over Q.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t n) : v_(n) {}
  Vector(std::initializer_list<Rational> init) : v_(init) {}
  explicit Vector(std::vector<Rational> v) : v_(std::move(v)) {}

  std::size_t dim() const { return v_.size(); }
  const Rational& operator[](std::size_t i) const { return v_[i]; }
  Rational& operator[](std::size_t i) { return v_[i]; }

  bool is_zero() const {
    for (const auto& x : v_)
      if (!x.is_zero()) return false;
    return true;
  }

  Vector operator-() const {
    Vector r(*this);
    for (auto& x : r.v_) x = -x;
    return r;
  }
  Vector& operator+=(const Vector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    check_dim(o);
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
  }
  Vector& operator*=(const Rational& c) {
    for (auto& x : v_) x *= c;
    return *this;
  }
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& c, Vector v) { return v *= c; }
  friend bool operator==(const Vector& a, const Vector& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Vector& a, const Vector& b) { return !(a == b); }

  static Vector unit(std::size_t n, std::size_t i) {
    Vector e(n);
    e[i] = 1;
    return e;
  }

  friend std::ostream& operator<<(std::ostream& os, const Vector& v) {
    os << "(";
    for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? ", " : "") << v[i];
    return os << ")";
  }

 private:
  void check_dim(const Vector& o) const {
    if (v_.size() != o.v_.size()) throw DimensionError("Vector: dimension mismatch");
  }
  std::vector<Rational> v_;
};

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    e_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("Matrix: ragged initializer");
      for (const auto& x : row) e_.push_back(x);
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Rational& operator()(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
  Rational& operator()(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static Matrix zero(std::size_t r, std::size_t c) { return Matrix(r, c); }

  static Matrix from_columns(const std::vector<Vector>& cols) {
    if (cols.empty()) return Matrix();
    Matrix m(cols.front().dim(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].dim() != m.rows_) throw DimensionError("Matrix::from_columns: ragged input");
      for (std::size_t r = 0; r < m.rows_; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  bool is_zero() const {
    for (const auto& x : e_)
      if (!x.is_zero()) return false;
    return true;
  }

  Vector col(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  Vector row(std::size_t r) const {
    Vector v(cols_);
    for (std::size_t c = 0; c < cols_; ++c) v[c] = (*this)(r, c);
    return v;
  }
  void set_col(std::size_t c, const Vector& v) {
    if (v.dim() != rows_) throw DimensionError("Matrix::set_col: dimension mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("Matrix::block: out of range");
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("Matrix::set_block: out of range");
    for (std::size_t r = 0; r < b.rows_; ++r)
      for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw DimensionError("Matrix::hstack: row mismatch");
    Matrix m(a.rows_, a.cols_ + b.cols_);
    m.set_block(0, 0, a);
    m.set_block(0, a.cols_, b);
    return m;
  }
  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw DimensionError("Matrix::vstack: column mismatch");
    Matrix m(a.rows_ + b.rows_, a.cols_);
    m.set_block(0, 0, a);
    m.set_block(a.rows_, 0, b);
    return m;
  }

  Matrix operator-() const {
    Matrix r(*this);
    for (auto& x : r.e_) x = -x;
    return r;
  }
  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] += o.e_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < e_.size(); ++i) e_[i] -= o.e_[i];
    return *this;
  }
  Matrix& operator*=(const Rational& c) {
    for (auto& x : e_) x *= c;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Rational& c, Matrix m) { return m *= c; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("Matrix: product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational& ark = a(r, k);
        if (ark.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }
  friend Vector operator*(const Matrix& a, const Vector& v) {
    if (a.cols_ != v.dim()) throw DimensionError("Matrix: matrix-vector shape mismatch");
    Vector w(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t c = 0; c < a.cols_; ++c)
        if (!a(r, c).is_zero()) w[r] += a(r, c) * v[c];
    return w;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << "[";
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << (r ? "; " : "");
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? " " : "") << m(r, c);
    }
    return os << "]";
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("Matrix: shape mismatch");
  }
  std::size_t rows_, cols_;
  std::vector<Rational> e_;
};

}  // namespace liext

#endif
