#ifndef LIEXT_LIE_ALGEBRA_HPP
#define LIEXT_LIE_ALGEBRA_HPP

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "liext/linalg.hpp"
#include "liext/matrix.hpp"

namespace liext {

/// One structure-constant term: [e_i, e_j] contains c * e_k, stored for i < j.
/// Indices are 0-based here; the JSON interchange format is 1-based.
struct BracketTerm {
  std::size_t i, j, k;
  Rational c;
};

/// Raw structure constants, not yet known to satisfy Jacobi.
struct StructureConstants {
  std::size_t dim = 0;
  std::vector<BracketTerm> terms;

  StructureConstants() = default;
  StructureConstants(std::size_t d, std::vector<BracketTerm> t) : dim(d), terms(std::move(t)) {}

  /// Dense per-pair table: entry for pair (i, j), i < j, is the vector [e_i, e_j].
  std::vector<Vector> pair_table() const {
    std::vector<Vector> table(dim * (dim - 1) / 2, Vector(dim));
    for (const auto& t : terms) {
      if (t.i >= t.j || t.j >= dim || t.k >= dim)
        throw DimensionError("StructureConstants: bad bracket index");
      table[pair_index(t.i, t.j)][t.k] += t.c;
    }
    return table;
  }

  std::size_t pair_index(std::size_t i, std::size_t j) const {
    // lexicographic position of (i, j), i < j
    return i * dim - i * (i + 1) / 2 + (j - i - 1);
  }
};

struct JacobiDefect {
  std::size_t i, j, k;
  Vector defect;  // [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej]
};

class LieAlgebra;
std::vector<JacobiDefect> jacobi_defect(const StructureConstants& sc);

/// Vector subspace of an ambient coordinate space, held by a canonical
/// (echelon) basis so equal subspaces compare equal.
class Subspace {
 public:
  Subspace(std::size_t ambient_dim, const Matrix& spanning_columns)
      : ambient_(ambient_dim),
        basis_(column_space_basis(spanning_columns.cols() == 0 ? Matrix(ambient_dim, 0)
                                                               : spanning_columns)) {
    if (spanning_columns.cols() != 0 && spanning_columns.rows() != ambient_dim)
      throw DimensionError("Subspace: ambient dimension mismatch");
  }
  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix(ambient_dim, 0)); }
  static Subspace full(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix::identity(ambient_dim)); }
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
    if (vectors.empty()) return zero(ambient_dim);
    return Subspace(ambient_dim, Matrix::from_columns(vectors));
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.col(i); }

  bool contains(const Vector& v) const {
    if (v.dim() != ambient_) throw DimensionError("Subspace::contains: dimension mismatch");
    if (v.is_zero()) return true;
    Matrix ext = Matrix::hstack(basis_, Matrix::from_columns({v}));
    return rank(ext) == dim();
  }
  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionError("Subspace::contains: ambient mismatch");
    return rank(Matrix::hstack(basis_, other.basis_)) == dim();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
};

/// Finite-dimensional real Lie algebra given by structure constants.
/// Construction verifies the Jacobi identity; every exposed LieAlgebra is genuine.
class LieAlgebra {
 public:
  explicit LieAlgebra(StructureConstants sc, std::vector<std::string> labels = {})
      : LieAlgebra(check_jacobi(std::move(sc)), std::move(labels), 0) {}

  /// Test-only escape hatch: wraps raw constants without the Jacobi check.
  static LieAlgebra unchecked(StructureConstants sc, std::vector<std::string> labels = {}) {
    return LieAlgebra(std::move(sc), std::move(labels), 0);
  }

  std::size_t dim() const { return sc_.dim; }
  const StructureConstants& structure_constants() const { return sc_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// [e_i, e_j] for basis indices (any order; diagonal is zero).
  Vector basis_bracket(std::size_t i, std::size_t j) const {
    if (i == j) return Vector(dim());
    if (i < j) return table_[sc_.pair_index(i, j)];
    return -table_[sc_.pair_index(j, i)];
  }

  /// Bilinear extension of the structure constants.
  Vector bracket(const Vector& x, const Vector& y) const {
    if (x.dim() != dim() || y.dim() != dim()) throw DimensionError("bracket: dimension mismatch");
    Vector out(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i].is_zero() && y[i].is_zero()) continue;
      for (std::size_t j = i + 1; j < dim(); ++j) {
        Rational coeff = x[i] * y[j] - x[j] * y[i];
        if (coeff.is_zero()) continue;
        const Vector& b = table_[sc_.pair_index(i, j)];
        for (std::size_t k = 0; k < dim(); ++k)
          if (!b[k].is_zero()) out[k] += coeff * b[k];
      }
    }
    return out;
  }

  /// Matrix of ad(e_i) acting on coordinate columns.
  Matrix ad_matrix(std::size_t i) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, basis_bracket(i, j));
    return m;
  }
  Matrix ad(const Vector& x) const {
    Matrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) m.set_col(j, bracket(x, Vector::unit(dim(), j)));
    return m;
  }

  bool is_abelian() const {
    for (const auto& v : table_)
      if (!v.is_zero()) return false;
    return true;
  }

  /// Span of all brackets, C^1(g).
  Subspace derived_subalgebra() const {
    std::vector<Vector> gens;
    for (const auto& v : table_)
      if (!v.is_zero()) gens.push_back(v);
    return Subspace::span(gens, dim());
  }

  /// z(g) = {x : [x, y] = 0 for all y}.
  Subspace center() const {
    // rows indexed by (basis j, coordinate c), unknowns x_i
    Matrix a(dim() * dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < dim(); ++j) {
        Vector b = basis_bracket(i, j);
        for (std::size_t c = 0; c < dim(); ++c) a(j * dim() + c, i) = b[c];
      }
    return Subspace::span(kernel_basis(a), dim());
  }

  bool is_ideal(const Subspace& s) const {
    check_subspace(s);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t c = 0; c < s.dim(); ++c)
        if (!s.contains(bracket(Vector::unit(dim(), i), s.basis_vector(c)))) return false;
    return true;
  }

  bool is_subalgebra(const Subspace& s) const {
    check_subspace(s);
    for (std::size_t a = 0; a < s.dim(); ++a)
      for (std::size_t b = a + 1; b < s.dim(); ++b)
        if (!s.contains(bracket(s.basis_vector(a), s.basis_vector(b)))) return false;
    return true;
  }

  /// D[x,y] = [Dx,y] + [x,Dy] on all basis pairs.
  bool is_derivation(const Matrix& d) const {
    if (d.rows() != dim() || d.cols() != dim()) throw DimensionError("is_derivation: shape mismatch");
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = i + 1; j < dim(); ++j) {
        Vector lhs = d * basis_bracket(i, j);
        Vector rhs = bracket(d.col(i), Vector::unit(dim(), j)) + bracket(Vector::unit(dim(), i), d.col(j));
        if (lhs != rhs) return false;
      }
    return true;
  }

  /// C^1(g) contained in z(g): abelian or 2-step nilpotent with central commutator.
  bool derived_in_center() const { return center().contains(derived_subalgebra()); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.sc_.dim == b.sc_.dim && a.table_ == b.table_;
  }

 private:
  LieAlgebra(StructureConstants sc, std::vector<std::string> labels, int)
      : sc_(std::move(sc)), table_(sc_.pair_table()), labels_(std::move(labels)) {
    if (labels_.empty())
      for (std::size_t i = 1; i <= sc_.dim; ++i) labels_.push_back("e" + std::to_string(i));
    if (labels_.size() != sc_.dim) throw DimensionError("LieAlgebra: label count mismatch");
  }

  static StructureConstants check_jacobi(StructureConstants sc) {
    auto defects = jacobi_defect(sc);
    if (!defects.empty()) {
      std::ostringstream os;
      os << "LieAlgebra: Jacobi identity fails on " << defects.size() << " basis triple(s); first ("
         << defects[0].i + 1 << "," << defects[0].j + 1 << "," << defects[0].k + 1 << ") -> "
         << defects[0].defect;
      throw ValidationError(os.str());
    }
    return sc;
  }

  void check_subspace(const Subspace& s) const {
    if (s.ambient_dim() != dim()) throw DimensionError("LieAlgebra: subspace ambient mismatch");
  }

  StructureConstants sc_;
  std::vector<Vector> table_;
  std::vector<std::string> labels_;
};

/// Nonzero cyclic sums [[x,y],z] + [[y,z],x] + [[z,x],y] over basis triples.
/// Empty exactly when the candidate is a Lie algebra.
inline std::vector<JacobiDefect> jacobi_defect(const StructureConstants& sc) {
  LieAlgebra raw = LieAlgebra::unchecked(sc);
  std::vector<JacobiDefect> defects;
  const std::size_t n = sc.dim;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector ei = Vector::unit(n, i), ej = Vector::unit(n, j), ek = Vector::unit(n, k);
        Vector d = raw.bracket(raw.bracket(ei, ej), ek) + raw.bracket(raw.bracket(ej, ek), ei) +
                   raw.bracket(raw.bracket(ek, ei), ej);
        if (!d.is_zero()) defects.push_back({i, j, k, std::move(d)});
      }
  return defects;
}

enum class CatalogName { R3, H1, R3_3, R3Lambda, R3Delta, SO3, SL2 };

inline const char* to_string(CatalogName n) {
  switch (n) {
    case CatalogName::R3: return "R3";
    case CatalogName::H1: return "h1";
    case CatalogName::R3_3: return "r3";
    case CatalogName::R3Lambda: return "r3_lambda";
    case CatalogName::R3Delta: return "r3_delta";
    case CatalogName::SO3: return "so3";
    case CatalogName::SL2: return "sl2";
  }
  return "?";
}

/// The seven three-dimensional families. r3_lambda needs lambda, r3_delta needs
/// delta. sl(2) uses the standard basis [e1,e2]=2e2, [e1,e3]=-2e3, [e2,e3]=e1.
inline LieAlgebra catalog(CatalogName name, std::optional<Rational> param = std::nullopt) {
  auto need = [&](const char* which) -> Rational {
    if (!param) throw ValidationError(std::string("catalog: parameter ") + which + " required");
    return *param;
  };
  switch (name) {
    case CatalogName::R3:
      return LieAlgebra(StructureConstants{3, {}});
    case CatalogName::H1:
      return LieAlgebra(StructureConstants{3, {{0, 1, 2, 1}}});
    case CatalogName::R3_3:
      return LieAlgebra(StructureConstants{3, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 2, 2, 1}}});
    case CatalogName::R3Lambda: {
      Rational l = need("lambda");
      return LieAlgebra(StructureConstants{3, {{0, 1, 1, 1}, {0, 2, 2, l}}});
    }
    case CatalogName::R3Delta: {
      Rational d = need("delta");
      return LieAlgebra(StructureConstants{3, {{0, 1, 1, 1}, {0, 1, 2, d}, {0, 2, 1, -d}, {0, 2, 2, 1}}});
    }
    case CatalogName::SO3:
      return LieAlgebra(StructureConstants{3, {{0, 1, 2, 1}, {0, 2, 1, -1}, {1, 2, 0, 1}}});
    case CatalogName::SL2:
      return LieAlgebra(StructureConstants{3, {{0, 1, 1, 2}, {0, 2, 2, -2}, {1, 2, 0, 1}}});
  }
  throw ValidationError("catalog: unknown name");
}

}  // namespace liext

#endif
