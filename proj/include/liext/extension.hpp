#ifndef LIEXT_EXTENSION_HPP
#define LIEXT_EXTENSION_HPP

#include <string>
#include <utility>
#include <vector>

#include "liext/cohomology.hpp"

namespace liext {

/// The tuple (k, h, pi, alpha) defining an extended semidirect product.
struct ExtensionData {
  Representation pi;    // k acting on h by derivations
  TwoCochain alpha;     // central-valued 2-cocycle on k

  ExtensionData(Representation rep, TwoCochain a) : pi(std::move(rep)), alpha(std::move(a)) {
    if (alpha.k_dim() != pi.source().dim() || alpha.h_dim() != pi.target().dim())
      throw DimensionError("ExtensionData: alpha shape mismatch");
  }

  const LieAlgebra& k() const { return pi.source(); }
  const LieAlgebra& h() const { return pi.target(); }

  static TwoCochain zero_alpha(const Representation& rep) {
    return TwoCochain(rep.source().dim(), rep.target().dim());
  }
};

struct ValidationReport {
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  std::string summary() const {
    if (ok()) return "ok";
    std::string s;
    for (const auto& f : failures) s += (s.empty() ? "" : "; ") + f;
    return s;
  }
};

/// Checks each hypothesis of the extension construction and reports every
/// failed one rather than stopping at the first.
inline ValidationReport validate_extension(const ExtensionData& data) {
  ValidationReport report;
  if (!data.pi.is_homomorphism()) report.failures.push_back("pi is not a Lie algebra homomorphism");
  if (!data.pi.acts_by_derivations()) report.failures.push_back("pi does not act by derivations");
  Subspace z = data.h().center();
  const std::size_t kd = data.k().dim();
  bool central = true;
  for (std::size_t i = 0; i < kd && central; ++i)
    for (std::size_t j = i + 1; j < kd && central; ++j)
      if (!z.contains(data.alpha.on_pair(i, j))) central = false;
  if (!central) report.failures.push_back("Im alpha not contained in the center of h");
  if (!is_two_cocycle(data.pi, data.alpha)) report.failures.push_back("alpha is not a 2-cocycle");
  return report;
}

class ExtendedAlgebra;
ExtendedAlgebra build_extension(const ExtensionData& data);

/// g = k (+) h with the bracket
///   [x,y] = [x,y]_h                      (x, y in h)
///   [x,y] = pi(x) y                      (x in k, y in h)
///   [x,y] = [x,y]_k + alpha(x,y)         (x, y in k)
/// Basis order: k first, h second (e1..e3 span k, e4..e6 span h in dimension 6).
class ExtendedAlgebra {
 public:
  const LieAlgebra& algebra() const { return g_; }
  const ExtensionData& data() const { return data_; }
  std::size_t k_dim() const { return k_dim_; }
  std::size_t h_dim() const { return h_dim_; }
  std::size_t dim() const { return g_.dim(); }

  Subspace k_subspace() const {
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < k_dim_; ++i) cols.push_back(Vector::unit(dim(), i));
    return Subspace::span(cols, dim());
  }
  Subspace h_subspace() const {
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < h_dim_; ++i) cols.push_back(Vector::unit(dim(), k_dim_ + i));
    return Subspace::span(cols, dim());
  }

  Vector embed_k(const Vector& x) const {
    if (x.dim() != k_dim_) throw DimensionError("embed_k: dimension mismatch");
    Vector v(dim());
    for (std::size_t i = 0; i < k_dim_; ++i) v[i] = x[i];
    return v;
  }
  Vector embed_h(const Vector& y) const {
    if (y.dim() != h_dim_) throw DimensionError("embed_h: dimension mismatch");
    Vector v(dim());
    for (std::size_t i = 0; i < h_dim_; ++i) v[k_dim_ + i] = y[i];
    return v;
  }
  Vector project_k(const Vector& v) const {
    Vector x(k_dim_);
    for (std::size_t i = 0; i < k_dim_; ++i) x[i] = v[i];
    return x;
  }
  Vector project_h(const Vector& v) const {
    Vector y(h_dim_);
    for (std::size_t i = 0; i < h_dim_; ++i) y[i] = v[k_dim_ + i];
    return y;
  }

  /// Almost product structure of the splitting: +1 on k, -1 on h.
  Matrix product_structure() const {
    Matrix e = Matrix::identity(dim());
    for (std::size_t i = k_dim_; i < dim(); ++i) e(i, i) = -1;
    return e;
  }

 private:
  friend ExtendedAlgebra build_extension(const ExtensionData& data);
  ExtendedAlgebra(LieAlgebra g, ExtensionData data, std::size_t kd, std::size_t hd)
      : g_(std::move(g)), data_(std::move(data)), k_dim_(kd), h_dim_(hd) {}

  LieAlgebra g_;
  ExtensionData data_;
  std::size_t k_dim_, h_dim_;
};

inline ExtendedAlgebra build_extension(const ExtensionData& data) {
  ValidationReport report = validate_extension(data);
  if (!report.ok()) throw ValidationError("build_extension: " + report.summary());

  const std::size_t kd = data.k().dim(), hd = data.h().dim(), n = kd + hd;
  StructureConstants sc;
  sc.dim = n;
  auto add_vector = [&sc](std::size_t i, std::size_t j, const Vector& v, std::size_t offset) {
    for (std::size_t t = 0; t < v.dim(); ++t)
      if (!v[t].is_zero()) sc.terms.push_back({i, j, offset + t, v[t]});
  };
  for (std::size_t i = 0; i < kd; ++i)
    for (std::size_t j = i + 1; j < kd; ++j) {
      add_vector(i, j, data.k().basis_bracket(i, j), 0);
      add_vector(i, j, data.alpha.on_pair(i, j), kd);
    }
  for (std::size_t i = 0; i < kd; ++i)
    for (std::size_t b = 0; b < hd; ++b)
      add_vector(i, kd + b, data.pi.matrix(i).col(b), kd);
  for (std::size_t a = 0; a < hd; ++a)
    for (std::size_t b = a + 1; b < hd; ++b)
      add_vector(kd + a, kd + b, data.h().basis_bracket(a, b), kd);

  std::vector<std::string> labels = data.k().labels();
  for (const auto& l : data.h().labels()) labels.push_back(l);
  // Jacobi is guaranteed once the validation passes; the constructor re-verifies.
  LieAlgebra g(std::move(sc), std::move(labels));
  return ExtendedAlgebra(std::move(g), data, kd, hd);
}

/// Test-only variant that skips validation and the Jacobi check, used to
/// inspect the raw bracket structure of invalid data.
inline LieAlgebra force_extension_algebra(const ExtensionData& data) {
  const std::size_t kd = data.k().dim(), hd = data.h().dim();
  StructureConstants sc;
  sc.dim = kd + hd;
  auto add_vector = [&sc](std::size_t i, std::size_t j, const Vector& v, std::size_t offset) {
    for (std::size_t t = 0; t < v.dim(); ++t)
      if (!v[t].is_zero()) sc.terms.push_back({i, j, offset + t, v[t]});
  };
  for (std::size_t i = 0; i < kd; ++i)
    for (std::size_t j = i + 1; j < kd; ++j) {
      add_vector(i, j, data.k().basis_bracket(i, j), 0);
      add_vector(i, j, data.alpha.on_pair(i, j), kd);
    }
  for (std::size_t i = 0; i < kd; ++i)
    for (std::size_t b = 0; b < hd; ++b) add_vector(i, kd + b, data.pi.matrix(i).col(b), kd);
  for (std::size_t a = 0; a < hd; ++a)
    for (std::size_t b = a + 1; b < hd; ++b) add_vector(kd + a, kd + b, data.h().basis_bracket(a, b), kd);
  return LieAlgebra::unchecked(std::move(sc));
}

/// Recovers (k-bracket, pi, alpha) from a splitting g = k_sub (+) h_sub with
/// h_sub an ideal. Components are expressed in the given bases.
inline ExtensionData split_extension(const LieAlgebra& g, const Subspace& h_sub, const Subspace& k_sub) {
  const std::size_t n = g.dim(), kd = k_sub.dim(), hd = h_sub.dim();
  if (h_sub.ambient_dim() != n || k_sub.ambient_dim() != n)
    throw DimensionError("split_extension: ambient dimension mismatch");
  if (kd + hd != n || rank(Matrix::hstack(k_sub.basis(), h_sub.basis())) != n)
    throw ValidationError("split_extension: k_sub is not a complement of h_sub");
  if (!g.is_ideal(h_sub)) throw ValidationError("split_extension: h_sub is not an ideal");

  Matrix t = Matrix::hstack(k_sub.basis(), h_sub.basis());
  Matrix tinv = inverse(t);
  auto in_split_coords = [&](const Vector& v) { return tinv * v; };

  // h with its restricted bracket
  StructureConstants hsc;
  hsc.dim = hd;
  for (std::size_t a = 0; a < hd; ++a)
    for (std::size_t b = a + 1; b < hd; ++b) {
      Vector w = in_split_coords(g.bracket(h_sub.basis_vector(a), h_sub.basis_vector(b)));
      for (std::size_t c = 0; c < hd; ++c)
        if (!w[kd + c].is_zero()) hsc.terms.push_back({a, b, c, w[kd + c]});
    }
  LieAlgebra h(std::move(hsc));

  // pi(x) y = [x, y], valued in h
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < kd; ++i) {
    Matrix m(hd, hd);
    for (std::size_t b = 0; b < hd; ++b) {
      Vector w = in_split_coords(g.bracket(k_sub.basis_vector(i), h_sub.basis_vector(b)));
      Vector col(hd);
      for (std::size_t c = 0; c < hd; ++c) col[c] = w[kd + c];
      m.set_col(b, col);
    }
    mats.push_back(std::move(m));
  }

  // k-bracket via p1, alpha via p2
  StructureConstants ksc;
  ksc.dim = kd;
  TwoCochain alpha(kd, hd);
  for (std::size_t i = 0; i < kd; ++i)
    for (std::size_t j = i + 1; j < kd; ++j) {
      Vector w = in_split_coords(g.bracket(k_sub.basis_vector(i), k_sub.basis_vector(j)));
      for (std::size_t c = 0; c < kd; ++c)
        if (!w[c].is_zero()) ksc.terms.push_back({i, j, c, w[c]});
      Vector a(hd);
      for (std::size_t c = 0; c < hd; ++c) a[c] = w[kd + c];
      alpha.set_pair(i, j, std::move(a));
    }
  LieAlgebra k(std::move(ksc));

  return ExtensionData(Representation(std::move(k), std::move(h), std::move(mats)), std::move(alpha));
}

/// alpha = 0 specialisation.
inline ExtendedAlgebra semidirect(const LieAlgebra& k, const LieAlgebra& h, std::vector<Matrix> pi_mats) {
  Representation rep(k, h, std::move(pi_mats));
  TwoCochain alpha = ExtensionData::zero_alpha(rep);
  return build_extension(ExtensionData(std::move(rep), std::move(alpha)));
}

inline ExtendedAlgebra semidirect(Representation rep) {
  TwoCochain alpha = ExtensionData::zero_alpha(rep);
  return build_extension(ExtensionData(std::move(rep), std::move(alpha)));
}

/// Tk = k x_ad V with V the underlying vector space of k (abelian fibre).
inline ExtendedAlgebra tangent_algebra(const LieAlgebra& k) {
  LieAlgebra fibre(StructureConstants{k.dim(), {}});
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < k.dim(); ++i) mats.push_back(k.ad_matrix(i));
  return semidirect(k, fibre, std::move(mats));
}

/// T*k = k x_ad* k*, with the coadjoint action ad*(x) phi = -phi o ad(x).
inline ExtendedAlgebra cotangent_algebra(const LieAlgebra& k) {
  return semidirect(Representation::coadjoint(k));
}

}  // namespace liext

#endif
