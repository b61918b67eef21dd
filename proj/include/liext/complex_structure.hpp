#ifndef LIEXT_COMPLEX_STRUCTURE_HPP
#define LIEXT_COMPLEX_STRUCTURE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liext/extension.hpp"

namespace liext {

/// J with J^2 = -1, enforced at construction.
class AlmostComplexStructure {
 public:
  explicit AlmostComplexStructure(Matrix j) : j_(std::move(j)) {
    if (!j_.is_square()) throw DimensionError("AlmostComplexStructure: matrix not square");
    if (j_ * j_ != -Matrix::identity(j_.rows()))
      throw ValidationError("AlmostComplexStructure: J^2 != -1");
  }

  std::size_t dim() const { return j_.rows(); }
  const Matrix& matrix() const { return j_; }
  Vector operator()(const Vector& x) const { return j_ * x; }

 private:
  Matrix j_;
};

/// E with E^2 = 1 and E != +-1.
class AlmostProductStructure {
 public:
  explicit AlmostProductStructure(Matrix e) : e_(std::move(e)) {
    if (!e_.is_square()) throw DimensionError("AlmostProductStructure: matrix not square");
    if (e_ * e_ != Matrix::identity(e_.rows()))
      throw ValidationError("AlmostProductStructure: E^2 != 1");
    if (e_ == Matrix::identity(e_.rows()) || e_ == -Matrix::identity(e_.rows()))
      throw ValidationError("AlmostProductStructure: E must differ from +-identity");
  }

  std::size_t dim() const { return e_.rows(); }
  const Matrix& matrix() const { return e_; }

  Subspace plus_eigenspace() const {
    return Subspace::span(kernel_basis(e_ - Matrix::identity(dim())), dim());
  }
  Subspace minus_eigenspace() const {
    return Subspace::span(kernel_basis(e_ + Matrix::identity(dim())), dim());
  }

 private:
  Matrix e_;
};

/// N_J(x,y) = [Jx,Jy] - J[Jx,y] - J[x,Jy] - [x,y], evaluated exactly.
inline Vector nijenhuis(const LieAlgebra& g, const AlmostComplexStructure& j, const Vector& x, const Vector& y) {
  if (j.dim() != g.dim()) throw DimensionError("nijenhuis: dimension mismatch");
  Vector jx = j(x), jy = j(y);
  return g.bracket(jx, jy) - j(g.bracket(jx, y)) - j(g.bracket(x, jy)) - g.bracket(x, y);
}

/// Same tensor through the coboundary route: N_J(x,y) = [Jx,Jy] - J (dJ)(x,y)
/// with d taken for the adjoint representation. Used as a cross-check oracle.
inline Vector nijenhuis_via_dj(const LieAlgebra& g, const AlmostComplexStructure& j, const Vector& x, const Vector& y) {
  Representation ad = Representation::adjoint(g);
  OneCochain cj(j.matrix());
  TwoCochain dj = d1(ad, cj);
  return g.bracket(j(x), j(y)) - j(dj(x, y));
}

inline bool is_integrable(const LieAlgebra& g, const AlmostComplexStructure& j) {
  const std::size_t n = g.dim();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (!nijenhuis(g, j, Vector::unit(n, a), Vector::unit(n, b)).is_zero()) return false;
  return true;
}

/// Nijenhuis vanishing restricted to pairs from a subspace u; for a splitting
/// g = u (+) Ju this decides full integrability.
inline bool nijenhuis_vanishes_on(const LieAlgebra& g, const AlmostComplexStructure& j, const Subspace& u) {
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t b = a + 1; b < u.dim(); ++b)
      if (!nijenhuis(g, j, u.basis_vector(a), u.basis_vector(b)).is_zero()) return false;
  return true;
}

struct ComplexClass {
  bool bi_invariant = false;  // c1: J[x,y] = [x,Jy]
  bool abelian = false;       // c2: [Jx,Jy] = [x,y]
  bool generic() const { return !bi_invariant && !abelian; }
};

inline ComplexClass classify_cs(const LieAlgebra& g, const AlmostComplexStructure& j) {
  const std::size_t n = g.dim();
  ComplexClass out;
  out.bi_invariant = true;
  out.abelian = true;
  for (std::size_t a = 0; a < n && (out.bi_invariant || out.abelian); ++a)
    for (std::size_t b = 0; b < n && (out.bi_invariant || out.abelian); ++b) {
      Vector ea = Vector::unit(n, a), eb = Vector::unit(n, b);
      if (out.bi_invariant && j(g.bracket(ea, eb)) != g.bracket(ea, j(eb))) out.bi_invariant = false;
      if (out.abelian && g.bracket(j(ea), j(eb)) != g.bracket(ea, eb)) out.abelian = false;
    }
  return out;
}

enum class SubspaceType { Complex, TotallyReal, Neither };

inline const char* to_string(SubspaceType t) {
  switch (t) {
    case SubspaceType::Complex: return "complex";
    case SubspaceType::TotallyReal: return "totally_real";
    case SubspaceType::Neither: return "neither";
  }
  return "?";
}

/// complex: JV inside V; totally real: V and JV intersect trivially.
inline SubspaceType subspace_type(const AlmostComplexStructure& j, const Subspace& v) {
  if (v.ambient_dim() != j.dim()) throw DimensionError("subspace_type: ambient mismatch");
  Matrix jv = j.matrix() * v.basis();
  std::size_t joint = rank(Matrix::hstack(v.basis(), jv));
  if (joint == v.dim()) return SubspaceType::Complex;
  if (joint == 2 * v.dim()) return SubspaceType::TotallyReal;  // J keeps rank, so rank(JV) = dim V
  return SubspaceType::Neither;
}

/// Sign convention for the block structure built from an invertible cocycle.
/// Standard is [[0, -j^-1], [j, 0]]; Flipped is the negative, [[0, j^-1], [-j, 0]].
enum class BlockSign { Standard, Flipped };

/// J(x, y) = (-j^-1 y, j x) in the extension basis; J^2 = -1 automatically.
inline AlmostComplexStructure J_from_cocycle(const ExtendedAlgebra& ext, const OneCochain& j,
                                             BlockSign sign = BlockSign::Standard) {
  const std::size_t kd = ext.k_dim(), hd = ext.h_dim();
  if (kd != hd) throw DimensionError("J_from_cocycle: dim k must equal dim h");
  if (j.m.rows() != hd || j.m.cols() != kd) throw DimensionError("J_from_cocycle: cochain shape mismatch");
  if (determinant(j.m).is_zero()) throw SingularMatrixError("J_from_cocycle: j is singular");
  Matrix jinv = inverse(j.m);
  Matrix full(ext.dim(), ext.dim());
  if (sign == BlockSign::Standard) {
    full.set_block(0, kd, -jinv);
    full.set_block(kd, 0, j.m);
  } else {
    full.set_block(0, kd, jinv);
    full.set_block(kd, 0, -j.m);
  }
  return AlmostComplexStructure(std::move(full));
}

/// alpha_j(x, y) = [jx, jy]_h.
inline TwoCochain alpha_from_j(const LieAlgebra& h, const OneCochain& j) {
  const std::size_t kd = j.m.cols();
  if (j.m.rows() != h.dim()) throw DimensionError("alpha_from_j: target dimension mismatch");
  TwoCochain alpha(kd, h.dim());
  for (std::size_t a = 0; a < kd; ++a)
    for (std::size_t b = a + 1; b < kd; ++b)
      alpha.set_pair(a, b, h.bracket(j.on_basis(a), j.on_basis(b)));
  return alpha;
}

struct TotallyRealConstruction {
  ExtendedAlgebra extension;
  AlmostComplexStructure j_full;
};

/// Builds g = k (+) h attached to (pi, alpha_j) together with the block
/// complex structure, for h two-step nilpotent or abelian and an invertible
/// 1-cocycle j. Rejects non-cocycles and singular j.
inline TotallyRealConstruction p22_construct(const Representation& pi, const OneCochain& j,
                                             BlockSign sign = BlockSign::Standard) {
  const LieAlgebra& k = pi.source();
  const LieAlgebra& h = pi.target();
  if (k.dim() != h.dim()) throw DimensionError("p22_construct: dim k must equal dim h");
  if (!h.derived_in_center())
    throw ValidationError("p22_construct: h must be abelian or 2-step nilpotent with central commutator");
  if (!is_one_cocycle(pi, j)) throw ValidationError("p22_construct: j is not a 1-cocycle");
  if (determinant(j.m).is_zero()) throw SingularMatrixError("p22_construct: j is singular");

  ExtendedAlgebra ext = build_extension(ExtensionData(pi, alpha_from_j(h, j)));
  AlmostComplexStructure full = J_from_cocycle(ext, j, sign);
  if (!is_integrable(ext.algebra(), full))
    throw ValidationError("p22_construct: internal error, construction not integrable");
  return {std::move(ext), std::move(full)};
}

struct T1Report {
  bool h_is_abelian = false;
  bool h_two_step_or_abelian = false;
  bool j_is_cocycle = false;
  bool alpha_matches_alpha_j = false;
  OneCochain recovered_j;
  ExtensionData split;
  bool ok() const { return h_two_step_or_abelian && j_is_cocycle && alpha_matches_alpha_j; }
};

/// Converse direction: given (g, J) with g = k_sub (+) J k_sub and J k_sub an
/// ideal, verifies h := J k is 2-step nilpotent or abelian and recovers the
/// inducing cocycle j (expressed against the echelon basis of J k).
inline T1Report t1_decompose(const LieAlgebra& g, const AlmostComplexStructure& j, const Subspace& k_sub) {
  Matrix jk_cols = j.matrix() * k_sub.basis();
  Subspace h_sub(g.dim(), jk_cols);
  if (h_sub.dim() + k_sub.dim() != g.dim() ||
      rank(Matrix::hstack(k_sub.basis(), h_sub.basis())) != g.dim())
    throw ValidationError("t1_decompose: g is not the direct sum of k and Jk");
  if (!g.is_ideal(h_sub)) throw ValidationError("t1_decompose: Jk is not an ideal");

  ExtensionData split = split_extension(g, h_sub, k_sub);

  // j = J restricted to k, written in the (k_sub, echelon JK) bases
  Matrix t = Matrix::hstack(k_sub.basis(), h_sub.basis());
  Matrix tinv = inverse(t);
  Matrix jm(h_sub.dim(), k_sub.dim());
  for (std::size_t c = 0; c < k_sub.dim(); ++c) {
    Vector w = tinv * (j.matrix() * k_sub.basis_vector(c));
    Vector col(h_sub.dim());
    for (std::size_t r = 0; r < h_sub.dim(); ++r) col[r] = w[k_sub.dim() + r];
    jm.set_col(c, col);
  }

  T1Report report{.h_is_abelian = split.h().is_abelian(),
                  .h_two_step_or_abelian = split.h().derived_in_center(),
                  .j_is_cocycle = false,
                  .alpha_matches_alpha_j = false,
                  .recovered_j = OneCochain(jm),
                  .split = split};
  report.j_is_cocycle = is_one_cocycle(split.pi, report.recovered_j);
  report.alpha_matches_alpha_j = (split.alpha == alpha_from_j(split.h(), report.recovered_j));
  return report;
}

/// [pi(x), J2] = 0 for every basis x of k.
inline bool is_holomorphic_action(const Representation& pi, const AlmostComplexStructure& j2) {
  if (j2.dim() != pi.target().dim()) throw DimensionError("is_holomorphic_action: dimension mismatch");
  for (const auto& m : pi.matrices())
    if (m * j2.matrix() != j2.matrix() * m) return false;
  return true;
}

/// B(J1 x, J1 y) = B(x, y) for an h-valued bilinear map given per-pair.
inline bool is_compatible_bilinear(const TwoCochain& b, const AlmostComplexStructure& j1) {
  const std::size_t n = b.k_dim();
  if (j1.dim() != n) throw DimensionError("is_compatible_bilinear: dimension mismatch");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c) {
      Vector ea = Vector::unit(n, a), ec = Vector::unit(n, c);
      if (b(j1(ea), j1(ec)) != b.on_pair(a, c)) return false;
    }
  return true;
}

enum class Eps { Plus, Minus };

struct ComplexIdealReport {
  bool condition_i = false;   // eps [pi(J1 x), J2] y + [pi(x), J2] J2 y = 0
  bool condition_ii = false;  // alpha(J1 x, J1 y) - alpha(x,y) + eps J2(alpha(J1 x, y) + alpha(x, J1 y)) = 0
  bool integrable = false;
  bool consistent() const { return (condition_i && condition_ii) == integrable; }
};

/// J_eps = (J1, +-J2) on an extension, with the two integrability conditions
/// evaluated independently of the Nijenhuis tensor.
inline std::pair<AlmostComplexStructure, ComplexIdealReport> complex_ideal_J(
    const ExtendedAlgebra& ext, const AlmostComplexStructure& j1, const AlmostComplexStructure& j2, Eps eps) {
  const std::size_t kd = ext.k_dim(), hd = ext.h_dim();
  if (j1.dim() != kd || j2.dim() != hd) throw DimensionError("complex_ideal_J: block dimension mismatch");
  Rational sign = (eps == Eps::Plus) ? 1 : -1;

  Matrix full(ext.dim(), ext.dim());
  full.set_block(0, 0, j1.matrix());
  full.set_block(kd, kd, sign * j2.matrix());
  AlmostComplexStructure j_full(full);

  const Representation& pi = ext.data().pi;
  const TwoCochain& alpha = ext.data().alpha;

  ComplexIdealReport report;
  report.condition_i = true;
  for (std::size_t i = 0; i < kd && report.condition_i; ++i) {
    Vector x = Vector::unit(kd, i);
    Matrix pjx = pi.act(j1(x));
    Matrix px = pi.act(x);
    Matrix lhs = sign * (pjx * j2.matrix() - j2.matrix() * pjx) +
                 (px * j2.matrix() - j2.matrix() * px) * j2.matrix();
    if (!lhs.is_zero()) report.condition_i = false;
  }
  report.condition_ii = true;
  for (std::size_t a = 0; a < kd && report.condition_ii; ++a)
    for (std::size_t b = a + 1; b < kd && report.condition_ii; ++b) {
      Vector ea = Vector::unit(kd, a), eb = Vector::unit(kd, b);
      Vector lhs = alpha(j1(ea), j1(eb)) - alpha.on_pair(a, b) +
                   sign * (j2.matrix() * (alpha(j1(ea), eb) + alpha(ea, j1(eb))));
      if (!lhs.is_zero()) report.condition_ii = false;
    }
  report.integrable = is_integrable(ext.algebra(), j_full);
  return {std::move(j_full), report};
}

struct ExtendedIdealReport {
  bool squares_to_minus_one = false;
  bool jbeta = false;       // J beta(x) = -beta(j x), encoded in Jtilde^2 = -1
  bool h_restriction = false;  // J_h integrable on h
  bool jkh = false;         // mixed (k, h) condition
  bool jink = false;        // k-component on k-pairs: j integrable for the k-bracket
  bool jinh = false;        // h-component on k-pairs
  bool integrable = false;
  std::string first_failure() const {
    if (!squares_to_minus_one) return "jbeta";
    if (!h_restriction) return "h-restriction";
    if (!jkh) return "jkh";
    if (!jink) return "Jink";
    if (!jinh) return "Jinh";
    return "";
  }
  bool ok() const { return squares_to_minus_one && integrable; }
};

/// Jtilde x = J x on h, Jtilde x = j x + beta(x) on k. The report pins the
/// failing named condition; jinh is read off as the h-component of the
/// Nijenhuis tensor on k-pairs.
inline std::pair<std::optional<AlmostComplexStructure>, ExtendedIdealReport> extended_complex_ideal_J(
    const ExtendedAlgebra& ext, const AlmostComplexStructure& j_h, const Matrix& j_k, const Matrix& beta) {
  const std::size_t kd = ext.k_dim(), hd = ext.h_dim();
  if (j_h.dim() != hd || j_k.rows() != kd || j_k.cols() != kd || beta.rows() != hd || beta.cols() != kd)
    throw DimensionError("extended_complex_ideal_J: block shape mismatch");

  Matrix full(ext.dim(), ext.dim());
  full.set_block(0, 0, j_k);
  full.set_block(kd, 0, beta);
  full.set_block(kd, kd, j_h.matrix());

  ExtendedIdealReport report;
  report.squares_to_minus_one = (full * full == -Matrix::identity(ext.dim()));
  report.jbeta = (j_h.matrix() * beta + beta * j_k).is_zero() && (j_k * j_k == -Matrix::identity(kd));
  if (!report.squares_to_minus_one) return {std::nullopt, report};

  AlmostComplexStructure jt(full);
  const LieAlgebra& g = ext.algebra();

  report.h_restriction = true;
  for (std::size_t a = 0; a < hd; ++a)
    for (std::size_t b = a + 1; b < hd; ++b)
      if (!nijenhuis(g, jt, Vector::unit(g.dim(), kd + a), Vector::unit(g.dim(), kd + b)).is_zero())
        report.h_restriction = false;

  report.jkh = true;
  for (std::size_t i = 0; i < kd; ++i)
    for (std::size_t b = 0; b < hd; ++b)
      if (!nijenhuis(g, jt, Vector::unit(g.dim(), i), Vector::unit(g.dim(), kd + b)).is_zero())
        report.jkh = false;

  report.jink = true;
  report.jinh = true;
  for (std::size_t a = 0; a < kd; ++a)
    for (std::size_t b = a + 1; b < kd; ++b) {
      Vector n = nijenhuis(g, jt, Vector::unit(g.dim(), a), Vector::unit(g.dim(), b));
      if (!ext.project_k(n).is_zero()) report.jink = false;
      if (!ext.project_h(n).is_zero()) report.jinh = false;
    }

  report.integrable = report.h_restriction && report.jkh && report.jink && report.jinh;
  return {std::move(jt), report};
}

struct ProductStructureReport {
  bool bracket_identity = false;       // [Ex,Ey] = -[x,y] + E[Ex,y] + E[x,Ey]
  bool eigenspaces_subalgebras = false;
  bool paracomplex = false;            // equal eigenspace dimensions
  bool integrable() const { return bracket_identity; }
  bool criteria_agree() const { return bracket_identity == eigenspaces_subalgebras; }
};

inline ProductStructureReport product_structure_checks(const LieAlgebra& g, const AlmostProductStructure& e) {
  if (e.dim() != g.dim()) throw DimensionError("product_structure_checks: dimension mismatch");
  ProductStructureReport report;
  report.bracket_identity = true;
  const Matrix& em = e.matrix();
  for (std::size_t a = 0; a < g.dim() && report.bracket_identity; ++a)
    for (std::size_t b = a + 1; b < g.dim() && report.bracket_identity; ++b) {
      Vector x = Vector::unit(g.dim(), a), y = Vector::unit(g.dim(), b);
      Vector lhs = g.bracket(em * x, em * y);
      Vector rhs = -g.bracket(x, y) + em * g.bracket(em * x, y) + em * g.bracket(x, em * y);
      if (lhs != rhs) report.bracket_identity = false;
    }
  Subspace plus = e.plus_eigenspace(), minus = e.minus_eigenspace();
  report.eigenspaces_subalgebras = g.is_subalgebra(plus) && g.is_subalgebra(minus);
  report.paracomplex = plus.dim() == minus.dim();
  return report;
}

/// Complex product pair: JE = -EJ.
inline bool is_complex_product_pair(const AlmostComplexStructure& j, const AlmostProductStructure& e) {
  return j.matrix() * e.matrix() == -(e.matrix() * j.matrix());
}

}  // namespace liext

#endif
