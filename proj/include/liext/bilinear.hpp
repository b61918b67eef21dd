#ifndef LIEXT_BILINEAR_HPP
#define LIEXT_BILINEAR_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liext/complex_structure.hpp"

namespace liext {

/// Non-degenerate symmetric bilinear form, held by its Gram matrix.
class Metric {
 public:
  explicit Metric(Matrix gram) : gram_(std::move(gram)) {
    if (!gram_.is_square()) throw DimensionError("Metric: gram matrix not square");
    if (gram_ != gram_.transpose()) throw ValidationError("Metric: gram matrix not symmetric");
    if (determinant(gram_).is_zero()) throw ValidationError("Metric: degenerate gram matrix");
  }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Rational eval(const Vector& x, const Vector& y) const {
    Vector gy = gram_ * y;
    Rational s = 0;
    for (std::size_t i = 0; i < x.dim(); ++i)
      if (!x[i].is_zero()) s += x[i] * gy[i];
    return s;
  }

 private:
  Matrix gram_;
};

/// Inertia (p, n) of a symmetric matrix by Lagrange congruence pivoting; no
/// eigenvalues, exact over Q.
inline std::pair<std::size_t, std::size_t> inertia(Matrix a) {
  if (!a.is_square() || a != a.transpose()) throw DimensionError("inertia: symmetric matrix required");
  const std::size_t n = a.rows();
  std::size_t pos = 0, neg = 0;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    // find a usable diagonal pivot
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && !a(i, i).is_zero()) { p = i; break; }
    if (p == n) {
      // all remaining diagonal zero; borrow an off-diagonal entry
      std::size_t bi = n, bj = n;
      for (std::size_t i = 0; i < n && bi == n; ++i)
        for (std::size_t j = i + 1; j < n && bi == n; ++j)
          if (!done[i] && !done[j] && !a(i, j).is_zero()) { bi = i; bj = j; }
      if (bi == n) break;  // remaining block is zero
      // x_i -> x_i + x_j makes the (i,i) entry 2 a_ij != 0
      for (std::size_t c = 0; c < n; ++c) a(bi, c) += a(bj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, bi) += a(r, bj);
      p = bi;
    }
    Rational piv = a(p, p);
    (piv.sign() > 0 ? pos : neg) += 1;
    // clear row/column p congruently
    for (std::size_t r = 0; r < n; ++r) {
      if (r == p || done[r] || a(r, p).is_zero()) continue;
      Rational f = a(r, p) / piv;
      for (std::size_t c = 0; c < n; ++c) a(r, c) -= f * a(p, c);
      for (std::size_t c = 0; c < n; ++c) a(c, r) = a(r, c);
    }
    done[p] = true;
  }
  return {pos, neg};
}

inline std::pair<std::size_t, std::size_t> signature(const Metric& m) { return inertia(m.gram()); }

enum class MetricSubspaceType { Isotropic, TotallyIsotropic, NonDegenerate, Other };

inline const char* to_string(MetricSubspaceType t) {
  switch (t) {
    case MetricSubspaceType::Isotropic: return "isotropic";
    case MetricSubspaceType::TotallyIsotropic: return "totally_isotropic";
    case MetricSubspaceType::NonDegenerate: return "non_degenerate";
    case MetricSubspaceType::Other: return "other";
  }
  return "?";
}

/// Orthogonal complement W-perp = {x : <x, w> = 0 for all w in W}.
inline Subspace metric_orthogonal(const Metric& m, const Subspace& w) {
  if (w.ambient_dim() != m.dim()) throw DimensionError("metric_orthogonal: ambient mismatch");
  Matrix rows = (m.gram() * w.basis()).transpose();  // each row: w_i^T G
  return Subspace::span(kernel_basis(rows), m.dim());
}

/// isotropic: W inside W-perp; totally isotropic: W = W-perp;
/// non-degenerate: W and W-perp intersect trivially. The strongest
/// applicable label is returned.
inline MetricSubspaceType subspace_metric_type(const Metric& m, const Subspace& w) {
  Subspace perp = metric_orthogonal(m, w);
  bool isotropic = perp.contains(w);
  if (isotropic) return (perp == w) ? MetricSubspaceType::TotallyIsotropic : MetricSubspaceType::Isotropic;
  // non-degenerate: W and W-perp intersect trivially
  if (rank(Matrix::hstack(w.basis(), perp.basis())) == w.dim() + perp.dim())
    return MetricSubspaceType::NonDegenerate;
  return MetricSubspaceType::Other;
}

/// <Jx, Jy> = <x, y> as the matrix identity J^T G J = G.
inline bool is_hermitian(const Metric& m, const AlmostComplexStructure& j) {
  if (j.dim() != m.dim()) throw DimensionError("is_hermitian: dimension mismatch");
  return j.matrix().transpose() * m.gram() * j.matrix() == m.gram();
}

/// <Jx, Jy> = -<x, y>.
inline bool is_anti_hermitian(const Metric& m, const AlmostComplexStructure& j) {
  if (j.dim() != m.dim()) throw DimensionError("is_anti_hermitian: dimension mismatch");
  return j.matrix().transpose() * m.gram() * j.matrix() == -m.gram();
}

/// <(x1, j y1), (x2, j y2)> = B(x1, x2) + B(y1, y2): block diagonal
/// [[B, 0], [0, j^-T B j^-1]]. Hermitian for the block J; k and h orthogonal.
inline Metric metric_sum(const Matrix& b, const OneCochain& j) {
  const std::size_t n = b.rows();
  if (!b.is_square() || j.m.rows() != n || j.m.cols() != n) throw DimensionError("metric_sum: shape mismatch");
  Matrix jinv = inverse(j.m);
  Matrix gram(2 * n, 2 * n);
  gram.set_block(0, 0, b);
  gram.set_block(n, n, jinv.transpose() * b * jinv);
  return Metric(std::move(gram));
}

/// <(x1, j y1), (x2, j y2)> = B(x1, y2) + B(x2, y1): block anti-diagonal
/// [[0, B j^-1], [j^-T B, 0]]. Anti-Hermitian; k and h totally isotropic;
/// signature (n, n).
inline Metric metric_pair(const Matrix& b, const OneCochain& j) {
  const std::size_t n = b.rows();
  if (!b.is_square() || j.m.rows() != n || j.m.cols() != n) throw DimensionError("metric_pair: shape mismatch");
  Matrix s = b * inverse(j.m);
  Matrix gram(2 * n, 2 * n);
  gram.set_block(0, n, s);
  gram.set_block(n, 0, s.transpose());
  return Metric(std::move(gram));
}

/// Hermitian metric attached to an inner product B on k for the block J of a
/// totally-real splitting; the orthogonal-sum construction.
inline Metric hermitian_from_B(const Matrix& b, const OneCochain& j) { return metric_sum(b, j); }

/// <(x1,y1),(x2,y2)> = -B(x1, j^-1 y2) - B(x2, j^-1 y1): anti-Hermitian, with
/// k and h totally isotropic.
inline Metric anti_hermitian_from_B(const Matrix& b, const OneCochain& j) {
  const std::size_t n = b.rows();
  if (!b.is_square() || j.m.rows() != n || j.m.cols() != n)
    throw DimensionError("anti_hermitian_from_B: shape mismatch");
  Matrix s = -(b * inverse(j.m));
  Matrix gram(2 * n, 2 * n);
  gram.set_block(0, n, s);
  gram.set_block(n, 0, s.transpose());
  return Metric(std::move(gram));
}

/// Skew non-degenerate form; closedness is evaluated against a Lie algebra.
class SymplecticForm {
 public:
  SymplecticForm(Matrix gram, const LieAlgebra& g) : gram_(std::move(gram)) {
    if (!gram_.is_square() || gram_.rows() != g.dim())
      throw DimensionError("SymplecticForm: gram shape mismatch");
    if (gram_ != -gram_.transpose()) throw ValidationError("SymplecticForm: gram not skew-symmetric");
    if (determinant(gram_).is_zero()) throw ValidationError("SymplecticForm: degenerate form");
    closed_ = closed_against(gram_, g);
  }

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  bool closed() const { return closed_; }

  Rational eval(const Vector& x, const Vector& y) const {
    Vector gy = gram_ * y;
    Rational s = 0;
    for (std::size_t i = 0; i < x.dim(); ++i)
      if (!x[i].is_zero()) s += x[i] * gy[i];
    return s;
  }

  /// omega([x,y],z) + omega([y,z],x) + omega([z,x],y) = 0 on basis triples.
  static bool closed_against(const Matrix& gram, const LieAlgebra& g) {
    const std::size_t n = g.dim();
    auto w = [&](const Vector& x, const Vector& y) {
      Vector gy = gram * y;
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (!x[i].is_zero()) s += x[i] * gy[i];
      return s;
    };
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) {
          Vector ea = Vector::unit(n, a), eb = Vector::unit(n, b), ec = Vector::unit(n, c);
          Rational s = w(g.bracket(ea, eb), ec) + w(g.bracket(eb, ec), ea) + w(g.bracket(ec, ea), eb);
          if (!s.is_zero()) return false;
        }
    return true;
  }

 private:
  Matrix gram_;
  bool closed_;
};

inline bool is_closed(const LieAlgebra& g, const SymplecticForm& w) {
  return SymplecticForm::closed_against(w.gram(), g);
}

inline Subspace symplectic_orthogonal(const SymplecticForm& w, const Subspace& v) {
  if (v.ambient_dim() != w.dim()) throw DimensionError("symplectic_orthogonal: ambient mismatch");
  Matrix rows = (w.gram() * v.basis()).transpose();
  return Subspace::span(kernel_basis(rows), w.dim());
}

enum class SymplecticSubspaceType { Isotropic, Lagrangian, Symplectic, Other };

inline const char* to_string(SymplecticSubspaceType t) {
  switch (t) {
    case SymplecticSubspaceType::Isotropic: return "isotropic";
    case SymplecticSubspaceType::Lagrangian: return "lagrangian";
    case SymplecticSubspaceType::Symplectic: return "symplectic";
    case SymplecticSubspaceType::Other: return "other";
  }
  return "?";
}

inline SymplecticSubspaceType subspace_symplectic_type(const SymplecticForm& w, const Subspace& v) {
  Subspace perp = symplectic_orthogonal(w, v);
  if (perp == v) return SymplecticSubspaceType::Lagrangian;
  if (perp.contains(v)) return SymplecticSubspaceType::Isotropic;
  if (rank(Matrix::hstack(v.basis(), perp.basis())) == v.dim() + perp.dim())
    return SymplecticSubspaceType::Symplectic;
  return SymplecticSubspaceType::Other;
}

/// omega(x, y) = <x, Jy>. A Hermitian metric gives a skew J-invariant form;
/// an anti-Hermitian metric gives a symmetric anti-invariant one, so the
/// result is returned raw with its classification flags.
struct InducedForm {
  Matrix gram;
  bool skew = false;
  bool symmetric = false;
  bool invariant = false;       // omega(Jx, Jy) = omega(x, y)
  bool anti_invariant = false;  // omega(Jx, Jy) = -omega(x, y)
  bool degenerate = false;
};

inline InducedForm omega_from_metric(const Metric& m, const AlmostComplexStructure& j) {
  if (j.dim() != m.dim()) throw DimensionError("omega_from_metric: dimension mismatch");
  InducedForm out;
  out.gram = m.gram() * j.matrix();
  Matrix t = out.gram.transpose();
  out.skew = (t == -out.gram);
  out.symmetric = (t == out.gram);
  Matrix conj = j.matrix().transpose() * out.gram * j.matrix();
  out.invariant = (conj == out.gram);
  out.anti_invariant = (conj == -out.gram);
  out.degenerate = determinant(out.gram).is_zero();
  return out;
}

/// Inverse of omega_from_metric: <x, y> = -omega(x, Jy), so G = -W J.
inline Matrix metric_gram_from_omega(const Matrix& omega_gram, const AlmostComplexStructure& j) {
  if (j.dim() != omega_gram.rows()) throw DimensionError("metric_gram_from_omega: dimension mismatch");
  return -(omega_gram * j.matrix());
}

/// Closed non-degenerate omega with omega(Jx,Jy) = omega(x,y) and integrable J.
inline bool is_pseudo_kahler(const LieAlgebra& g, const SymplecticForm& w, const AlmostComplexStructure& j) {
  if (!is_closed(g, w)) return false;
  if (!is_integrable(g, j)) return false;
  return j.matrix().transpose() * w.gram() * j.matrix() == w.gram();
}

/// Closed non-degenerate omega with omega(Jx,Jy) = -omega(x,y) and integrable J.
inline bool is_complex_symplectic(const LieAlgebra& g, const SymplecticForm& w, const AlmostComplexStructure& j) {
  if (!is_closed(g, w)) return false;
  if (!is_integrable(g, j)) return false;
  return j.matrix().transpose() * w.gram() * j.matrix() == -w.gram();
}

struct IsotropicIdealReport {
  bool is_ideal = false;
  bool isotropic = false;
  bool h_abelian = false;
  /// true when the hypotheses held and the conclusion was verified
  bool asserted = false;
  std::string note;
};

/// Isotropic ideals of symplectic Lie algebras are abelian; the report only
/// asserts the conclusion when the hypotheses actually hold.
inline IsotropicIdealReport isotropic_ideal_report(const LieAlgebra& g, const SymplecticForm& w,
                                                   const Subspace& h_sub) {
  IsotropicIdealReport report;
  report.is_ideal = g.is_ideal(h_sub);
  auto type = subspace_symplectic_type(w, h_sub);
  report.isotropic = (type == SymplecticSubspaceType::Isotropic || type == SymplecticSubspaceType::Lagrangian);
  if (!report.is_ideal || !report.isotropic || !w.closed()) {
    report.note = "hypotheses not met; nothing asserted";
    return report;
  }
  bool abelian = true;
  for (std::size_t a = 0; a < h_sub.dim() && abelian; ++a)
    for (std::size_t b = a + 1; b < h_sub.dim() && abelian; ++b)
      if (!g.bracket(h_sub.basis_vector(a), h_sub.basis_vector(b)).is_zero()) abelian = false;
  report.h_abelian = abelian;
  report.asserted = true;
  report.note = abelian ? "isotropic ideal is abelian" : "VIOLATION: isotropic ideal not abelian";
  return report;
}

struct JhSubalgebraReport {
  bool hypotheses_met = false;
  bool jh_subalgebra = false;
  bool totally_real = false;
  bool semidirect_decomposition = false;  // g = Jh (+) h when totally real
  std::string note;
};

/// For an isotropic ideal h of a symplectic Lie algebra with complex structure
/// J, Jh is a subalgebra; if h is additionally totally real, g = Jh x| h.
inline JhSubalgebraReport jh_subalgebra_check(const LieAlgebra& g, const SymplecticForm& w,
                                              const AlmostComplexStructure& j, const Subspace& h_sub) {
  JhSubalgebraReport report;
  auto iso = isotropic_ideal_report(g, w, h_sub);
  bool integrable = is_integrable(g, j);
  report.hypotheses_met = iso.asserted && integrable;
  if (!report.hypotheses_met) {
    report.note = "hypotheses not met; nothing asserted";
    return report;
  }
  Subspace jh(g.dim(), j.matrix() * h_sub.basis());
  report.jh_subalgebra = g.is_subalgebra(jh);
  report.totally_real = (subspace_type(j, h_sub) == SubspaceType::TotallyReal);
  if (report.totally_real)
    report.semidirect_decomposition =
        report.jh_subalgebra && rank(Matrix::hstack(jh.basis(), h_sub.basis())) == g.dim();
  report.note = report.jh_subalgebra ? "Jh closes under the bracket" : "VIOLATION: Jh not a subalgebra";
  return report;
}

/// Neutral pairing of u and u*: gram [[0, I], [I, 0]].
inline Metric hyperbolic_metric(std::size_t n) {
  Matrix gram(2 * n, 2 * n);
  gram.set_block(0, n, Matrix::identity(n));
  gram.set_block(n, 0, Matrix::identity(n));
  return Metric(std::move(gram));
}

struct GcsType {
  bool complex_type = false;    // j2 = j3 = 0
  bool symplectic_type = false; // j1 = j4 = 0
  std::optional<std::size_t> type_k;  // rank j2 = 2(n - k)
};

/// Block type of J on T*k with the splitting k (+) k*; dim k = 2n.
inline GcsType gcs_type(const AlmostComplexStructure& j) {
  if (j.dim() % 2 != 0) throw DimensionError("gcs_type: even dimension required");
  const std::size_t half = j.dim() / 2;
  Matrix j1 = j.matrix().block(0, 0, half, half);
  Matrix j2 = j.matrix().block(0, half, half, half);
  Matrix j3 = j.matrix().block(half, 0, half, half);
  Matrix j4 = j.matrix().block(half, half, half, half);
  GcsType out;
  out.complex_type = j2.is_zero() && j3.is_zero();
  out.symplectic_type = j1.is_zero() && j4.is_zero();
  std::size_t r = rank(j2);
  if (half % 2 == 0 && r % 2 == 0) out.type_k = half / 2 - r / 2;
  return out;
}

struct GcsReport {
  bool hermitian = false;
  bool integrable = false;
  GcsType type;
  bool ok() const { return hermitian && integrable; }
};

/// A generalized complex structure on k is a Hermitian structure (J, <,>) on
/// T*k with the canonical neutral metric.
inline GcsReport gcs_check(const LieAlgebra& k, const AlmostComplexStructure& j) {
  if (k.dim() % 2 != 0) throw ValidationError("gcs_check: the dimension of k must be even");
  ExtendedAlgebra tstar = cotangent_algebra(k);
  if (j.dim() != tstar.dim()) throw DimensionError("gcs_check: J dimension mismatch");
  GcsReport report;
  report.hermitian = is_hermitian(hyperbolic_metric(k.dim()), j);
  report.integrable = is_integrable(tstar.algebra(), j);
  report.type = gcs_type(j);
  return report;
}

/// J(x, y) = (-j^-1 y, j x) on T*k from an invertible 1-cocycle of (k, ad*).
/// Compatibility with the neutral metric holds exactly when j is
/// skew-symmetric (then j is a symplectic form on k); require_hermitian
/// enforces this up front.
inline AlmostComplexStructure gcs_from_cocycle(const LieAlgebra& k, const OneCochain& j,
                                               bool require_hermitian = true) {
  if (k.dim() % 2 != 0) throw ValidationError("gcs_from_cocycle: the dimension of k must be even");
  Representation coad = Representation::coadjoint(k);
  if (!is_one_cocycle(coad, j)) throw ValidationError("gcs_from_cocycle: j is not a coadjoint 1-cocycle");
  if (determinant(j.m).is_zero()) throw SingularMatrixError("gcs_from_cocycle: j is singular");
  if (require_hermitian && j.m != -j.m.transpose())
    throw ValidationError("gcs_from_cocycle: j must be skew-symmetric for neutral-metric compatibility");
  ExtendedAlgebra tstar = cotangent_algebra(k);
  return J_from_cocycle(tstar, j);
}

/// Low-weight search of Z^1(k, ad*) for a skew-symmetric invertible element,
/// i.e. a symplectic form on k. Tries combinations of at most max_weight
/// basis cocycles with coefficients in {1, -1, 2}.
inline std::optional<OneCochain> find_symplectic_cocycle(const LieAlgebra& k, std::size_t max_weight = 3) {
  Representation coad = Representation::coadjoint(k);
  std::vector<OneCochain> basis = z1_basis(coad);
  const Rational coeffs[] = {1, -1, 2};
  std::vector<std::size_t> pick;
  std::optional<OneCochain> result;

  auto try_values = [&](auto&& self, std::size_t slot, Matrix acc) -> bool {
    if (slot == pick.size()) {
      if (acc == -acc.transpose() && !determinant(acc).is_zero()) {
        result = OneCochain(acc);
        return true;
      }
      return false;
    }
    for (const Rational& c : coeffs)
      if (self(self, slot + 1, acc + c * basis[pick[slot]].m)) return true;
    return false;
  };
  auto choose = [&](auto&& self, std::size_t start, std::size_t remaining) -> bool {
    if (remaining == 0)
      return try_values(try_values, 0, Matrix::zero(k.dim(), k.dim()));
    for (std::size_t i = start; i < basis.size(); ++i) {
      pick.push_back(i);
      if (self(self, i + 1, remaining - 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t w = 1; w <= max_weight; ++w)
    if (choose(choose, 0, w)) return result;
  return std::nullopt;
}

/// Extracts the k -> k* block of a symplectic-type structure on T*k.
inline OneCochain gcs_extract_cocycle(const AlmostComplexStructure& j) {
  if (j.dim() % 2 != 0) throw DimensionError("gcs_extract_cocycle: even dimension required");
  const std::size_t half = j.dim() / 2;
  return OneCochain(j.matrix().block(half, 0, half, half));
}

}  // namespace liext

#endif
