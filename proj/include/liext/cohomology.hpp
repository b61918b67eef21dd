#ifndef LIEXT_COHOMOLOGY_HPP
#define LIEXT_COHOMOLOGY_HPP

#include <utility>
#include <vector>

#include "liext/lie_algebra.hpp"

namespace liext {

/// Representation of k on h by derivations: one matrix per basis vector of k,
/// acting on h-coordinate columns.
class Representation {
 public:
  Representation(LieAlgebra source, LieAlgebra target, std::vector<Matrix> matrices)
      : k_(std::move(source)), h_(std::move(target)), mats_(std::move(matrices)) {
    if (mats_.size() != k_.dim()) throw DimensionError("Representation: one matrix per k-basis vector required");
    for (const auto& m : mats_)
      if (m.rows() != h_.dim() || m.cols() != h_.dim())
        throw DimensionError("Representation: matrix shape mismatch");
  }

  const LieAlgebra& source() const { return k_; }
  const LieAlgebra& target() const { return h_; }
  const Matrix& matrix(std::size_t i) const { return mats_[i]; }
  const std::vector<Matrix>& matrices() const { return mats_; }

  /// pi(x) for an arbitrary x in k.
  Matrix act(const Vector& x) const {
    if (x.dim() != k_.dim()) throw DimensionError("Representation::act: dimension mismatch");
    Matrix m(h_.dim(), h_.dim());
    for (std::size_t i = 0; i < k_.dim(); ++i)
      if (!x[i].is_zero()) m += x[i] * mats_[i];
    return m;
  }

  /// pi([x,y]) = pi(x)pi(y) - pi(y)pi(x) on basis pairs.
  bool is_homomorphism() const {
    for (std::size_t i = 0; i < k_.dim(); ++i)
      for (std::size_t j = i + 1; j < k_.dim(); ++j)
        if (act(k_.basis_bracket(i, j)) != mats_[i] * mats_[j] - mats_[j] * mats_[i]) return false;
    return true;
  }

  bool acts_by_derivations() const {
    for (const auto& m : mats_)
      if (!h_.is_derivation(m)) return false;
    return true;
  }

  bool is_valid() const { return is_homomorphism() && acts_by_derivations(); }

  /// Adjoint representation of g on itself.
  static Representation adjoint(const LieAlgebra& g) {
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < g.dim(); ++i) mats.push_back(g.ad_matrix(i));
    return Representation(g, g, std::move(mats));
  }

  /// Coadjoint representation on the (abelian) dual space: ad*(x) = -ad(x)^T.
  static Representation coadjoint(const LieAlgebra& g) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= g.dim(); ++i) labels.push_back("e" + std::to_string(i) + "*");
    LieAlgebra dual(StructureConstants{g.dim(), {}}, std::move(labels));
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < g.dim(); ++i) mats.push_back(-g.ad_matrix(i).transpose());
    return Representation(g, std::move(dual), std::move(mats));
  }

 private:
  LieAlgebra k_, h_;
  std::vector<Matrix> mats_;
};

/// Linear map theta: k -> h, stored as an h.dim x k.dim matrix; column m is theta(e_m).
struct OneCochain {
  Matrix m;

  OneCochain() = default;
  explicit OneCochain(Matrix mat) : m(std::move(mat)) {}

  Vector operator()(const Vector& x) const { return m * x; }
  Vector on_basis(std::size_t i) const { return m.col(i); }

  friend bool operator==(const OneCochain& a, const OneCochain& b) { return a.m == b.m; }
};

/// Alternating bilinear map k x k -> h; values stored per basis pair i < j.
class TwoCochain {
 public:
  TwoCochain(std::size_t k_dim, std::size_t h_dim)
      : k_dim_(k_dim), h_dim_(h_dim), values_(k_dim * (k_dim - 1) / 2, Vector(h_dim)) {}

  std::size_t k_dim() const { return k_dim_; }
  std::size_t h_dim() const { return h_dim_; }

  const Vector& on_pair(std::size_t i, std::size_t j) const { return values_[index(i, j)]; }
  void set_pair(std::size_t i, std::size_t j, Vector v) {
    if (v.dim() != h_dim_) throw DimensionError("TwoCochain: value dimension mismatch");
    values_[index(i, j)] = std::move(v);
  }

  /// alpha(e_i, e_j) for any order of indices.
  Vector on_basis(std::size_t i, std::size_t j) const {
    if (i == j) return Vector(h_dim_);
    return i < j ? values_[index(i, j)] : -values_[index(j, i)];
  }

  Vector operator()(const Vector& x, const Vector& y) const {
    if (x.dim() != k_dim_ || y.dim() != k_dim_) throw DimensionError("TwoCochain: argument dimension mismatch");
    Vector out(h_dim_);
    for (std::size_t i = 0; i < k_dim_; ++i)
      for (std::size_t j = i + 1; j < k_dim_; ++j) {
        Rational c = x[i] * y[j] - x[j] * y[i];
        if (!c.is_zero()) out += c * values_[index(i, j)];
      }
    return out;
  }

  bool is_zero() const {
    for (const auto& v : values_)
      if (!v.is_zero()) return false;
    return true;
  }

  friend bool operator==(const TwoCochain& a, const TwoCochain& b) {
    return a.k_dim_ == b.k_dim_ && a.values_ == b.values_;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j) const {
    if (!(i < j && j < k_dim_)) throw DimensionError("TwoCochain: bad pair index");
    return i * k_dim_ - i * (i + 1) / 2 + (j - i - 1);
  }
  std::size_t k_dim_, h_dim_;
  std::vector<Vector> values_;
};

/// Alternating trilinear values on basis triples i < j < k; only produced by d2.
class ThreeCochain {
 public:
  ThreeCochain(std::size_t k_dim, std::size_t h_dim) : k_dim_(k_dim), h_dim_(h_dim) {
    std::size_t n = k_dim >= 3 ? k_dim * (k_dim - 1) * (k_dim - 2) / 6 : 0;
    values_.assign(n, Vector(h_dim));
  }

  const Vector& on_triple(std::size_t i, std::size_t j, std::size_t k) const { return values_[index(i, j, k)]; }
  void set_triple(std::size_t i, std::size_t j, std::size_t k, Vector v) { values_[index(i, j, k)] = std::move(v); }

  bool is_zero() const {
    for (const auto& v : values_)
      if (!v.is_zero()) return false;
    return true;
  }

 private:
  std::size_t index(std::size_t i, std::size_t j, std::size_t k) const {
    if (!(i < j && j < k && k < k_dim_)) throw DimensionError("ThreeCochain: bad triple index");
    // position of (i,j,k) in lexicographic order
    std::size_t n = k_dim_;
    auto c2 = [](std::size_t m) { return m * (m - 1) / 2; };
    auto c3 = [](std::size_t m) { return m >= 3 ? m * (m - 1) * (m - 2) / 6 : 0; };
    return c3(n) - c3(n - i) + c2(n - i - 1) - c2(n - j) + (k - j - 1);
  }
  std::size_t k_dim_, h_dim_;
  std::vector<Vector> values_;
};

/// d theta(x,y) = pi(x) theta(y) - pi(y) theta(x) - theta([x,y]).
inline TwoCochain d1(const Representation& rho, const OneCochain& theta) {
  const std::size_t kd = rho.source().dim(), hd = rho.target().dim();
  if (theta.m.rows() != hd || theta.m.cols() != kd) throw DimensionError("d1: cochain shape mismatch");
  TwoCochain out(kd, hd);
  for (std::size_t i = 0; i < kd; ++i)
    for (std::size_t j = i + 1; j < kd; ++j)
      out.set_pair(i, j, rho.matrix(i) * theta.on_basis(j) - rho.matrix(j) * theta.on_basis(i) -
                             theta(rho.source().basis_bracket(i, j)));
  return out;
}

inline bool is_one_cocycle(const Representation& rho, const OneCochain& theta) {
  return d1(rho, theta).is_zero();
}

/// theta_h(x) = pi(x) h, always a 1-cocycle.
inline OneCochain coboundary_of(const Representation& rho, const Vector& h_elem) {
  if (h_elem.dim() != rho.target().dim()) throw DimensionError("coboundary_of: dimension mismatch");
  Matrix m(rho.target().dim(), rho.source().dim());
  for (std::size_t i = 0; i < rho.source().dim(); ++i) m.set_col(i, rho.matrix(i) * h_elem);
  return OneCochain(std::move(m));
}

/// d alpha(x,y,z) = sum_cyc alpha([x,y],z) - sum_cyc pi(x) alpha(y,z).
inline ThreeCochain d2(const Representation& rho, const TwoCochain& alpha) {
  const std::size_t kd = rho.source().dim(), hd = rho.target().dim();
  if (alpha.k_dim() != kd || alpha.h_dim() != hd) throw DimensionError("d2: cochain shape mismatch");
  ThreeCochain out(kd, hd);
  const LieAlgebra& k = rho.source();
  auto unit = [kd](std::size_t i) { return Vector::unit(kd, i); };
  for (std::size_t i = 0; i < kd; ++i)
    for (std::size_t j = i + 1; j < kd; ++j)
      for (std::size_t l = j + 1; l < kd; ++l) {
        Vector v = alpha(k.basis_bracket(i, j), unit(l)) + alpha(k.basis_bracket(j, l), unit(i)) +
                   alpha(k.basis_bracket(l, i), unit(j)) - rho.matrix(i) * alpha.on_basis(j, l) -
                   rho.matrix(j) * alpha.on_basis(l, i) - rho.matrix(l) * alpha.on_basis(i, j);
        out.set_triple(i, j, l, std::move(v));
      }
  return out;
}

inline bool is_two_cocycle(const Representation& rho, const TwoCochain& alpha) {
  return d2(rho, alpha).is_zero();
}

/// Unknown ordering for the linearised d1: theta's matrix read row by row
/// (row r, column c) -> index r * k.dim + c, i.e. the j_41, j_42, ..., j_63
/// reading order in the 3 x 3 case.
inline std::size_t cochain_flat_index(std::size_t row, std::size_t col, std::size_t k_dim) {
  return row * k_dim + col;
}

inline OneCochain cochain_from_flat(const Vector& flat, std::size_t k_dim, std::size_t h_dim) {
  if (flat.dim() != k_dim * h_dim) throw DimensionError("cochain_from_flat: size mismatch");
  Matrix m(h_dim, k_dim);
  for (std::size_t r = 0; r < h_dim; ++r)
    for (std::size_t c = 0; c < k_dim; ++c) m(r, c) = flat[cochain_flat_index(r, c, k_dim)];
  return OneCochain(std::move(m));
}

inline Vector cochain_to_flat(const OneCochain& theta) {
  const std::size_t hd = theta.m.rows(), kd = theta.m.cols();
  Vector flat(hd * kd);
  for (std::size_t r = 0; r < hd; ++r)
    for (std::size_t c = 0; c < kd; ++c) flat[cochain_flat_index(r, c, kd)] = theta.m(r, c);
  return flat;
}

/// Matrix of the linearised d1. Rows: basis pairs (i < j) in lexicographic
/// order, h.dim rows each; columns: flattened cochain unknowns.
inline Matrix d1_matrix(const Representation& rho) {
  const std::size_t kd = rho.source().dim(), hd = rho.target().dim();
  const std::size_t npairs = kd * (kd - 1) / 2;
  Matrix sys(npairs * hd, kd * hd);
  std::size_t block = 0;
  for (std::size_t i = 0; i < kd; ++i)
    for (std::size_t j = i + 1; j < kd; ++j, ++block) {
      Vector br = rho.source().basis_bracket(i, j);
      for (std::size_t out = 0; out < hd; ++out) {
        std::size_t row = block * hd + out;
        for (std::size_t r = 0; r < hd; ++r) {
          // + pi(e_i) column j, - pi(e_j) column i
          sys(row, cochain_flat_index(r, j, kd)) += rho.matrix(i)(out, r);
          sys(row, cochain_flat_index(r, i, kd)) -= rho.matrix(j)(out, r);
        }
        // - theta([e_i, e_j]) = - sum_l br_l * column l
        for (std::size_t l = 0; l < kd; ++l)
          if (!br[l].is_zero()) sys(row, cochain_flat_index(out, l, kd)) -= br[l];
      }
    }
  return sys;
}

inline std::vector<OneCochain> z1_basis(const Representation& rho) {
  std::vector<OneCochain> out;
  for (const auto& v : kernel_basis(d1_matrix(rho)))
    out.push_back(cochain_from_flat(v, rho.source().dim(), rho.target().dim()));
  return out;
}

inline std::vector<OneCochain> b1_basis(const Representation& rho) {
  const std::size_t hd = rho.target().dim();
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < hd; ++a)
    cols.push_back(cochain_to_flat(coboundary_of(rho, Vector::unit(hd, a))));
  Matrix basis = column_space_basis(Matrix::from_columns(cols));
  std::vector<OneCochain> out;
  for (std::size_t c = 0; c < basis.cols(); ++c)
    out.push_back(cochain_from_flat(basis.col(c), rho.source().dim(), hd));
  return out;
}

inline std::size_t z1_dim(const Representation& rho) {
  return rho.source().dim() * rho.target().dim() - rank(d1_matrix(rho));
}

inline std::size_t h1_dim(const Representation& rho) {
  return z1_dim(rho) - b1_basis(rho).size();
}

}  // namespace liext

#endif
