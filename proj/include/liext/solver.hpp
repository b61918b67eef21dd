#ifndef LIEXT_SOLVER_HPP
#define LIEXT_SOLVER_HPP

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "liext/bilinear.hpp"
#include "liext/complex_structure.hpp"

namespace liext {

enum class KFamily { H1, R3, R3Lambda, R3Delta };
enum class HTarget { R3, H1 };
enum class RepType { I, II, III, IV };

inline const char* to_string(KFamily f) {
  switch (f) {
    case KFamily::H1: return "h1";
    case KFamily::R3: return "r3";
    case KFamily::R3Lambda: return "r3_lambda";
    case KFamily::R3Delta: return "r3_delta";
  }
  return "?";
}
inline const char* to_string(HTarget t) { return t == HTarget::R3 ? "R3" : "h1"; }
inline const char* to_string(RepType t) {
  switch (t) {
    case RepType::I: return "i";
    case RepType::II: return "ii";
    case RepType::III: return "iii";
    case RepType::IV: return "iv";
  }
  return "?";
}

/// Scalar data of a case: representation parameters, the coefficients of
/// pi(e2), pi(e3), and the family parameter of k where applicable.
struct CaseParams {
  Rational eta, nu, mu;
  Rational eps1, eps2;
  Rational lambda, delta;
};

/// One solver case: the acting algebra family, the target, the type of the
/// rank-one generator t and its parameters. Construction normalises the
/// eps coefficients: pi vanishes on the derived subalgebra of k, so the
/// corresponding entries are forced to zero.
struct CaseSpec {
  KFamily k_family;
  HTarget h_target;
  RepType rep_type;
  CaseParams params;

  CaseSpec(KFamily kf, HTarget ht, RepType rt, CaseParams p)
      : k_family(kf), h_target(ht), rep_type(rt), params(std::move(p)) {
    if (h_target == HTarget::H1 && (rep_type == RepType::III || rep_type == RepType::IV))
      throw ValidationError("CaseSpec: derivations of h1 only come in types i and ii");
    switch (k_family) {
      case KFamily::H1:
        params.eps2 = 0;  // e3 spans the derived subalgebra
        break;
      case KFamily::R3:
      case KFamily::R3Delta:
        params.eps1 = 0;
        params.eps2 = 0;
        break;
      case KFamily::R3Lambda:
        params.eps1 = 0;  // e2 is always derived
        if (!params.lambda.is_zero()) params.eps2 = 0;
        break;
    }
  }

  LieAlgebra k() const {
    switch (k_family) {
      case KFamily::H1: return catalog(CatalogName::H1);
      case KFamily::R3: return catalog(CatalogName::R3_3);
      case KFamily::R3Lambda: return catalog(CatalogName::R3Lambda, params.lambda);
      case KFamily::R3Delta: return catalog(CatalogName::R3Delta, params.delta);
    }
    throw ValidationError("CaseSpec: unknown k family");
  }
  LieAlgebra h() const {
    return h_target == HTarget::R3 ? catalog(CatalogName::R3) : catalog(CatalogName::H1);
  }

  std::string label() const {
    std::string s = std::string(to_string(k_family)) + "/" + to_string(h_target) + "/" + to_string(rep_type);
    s += " eta=" + params.eta.str() + " nu=" + params.nu.str() + " mu=" + params.mu.str();
    s += " eps=(" + params.eps1.str() + "," + params.eps2.str() + ")";
    if (k_family == KFamily::R3Lambda) s += " lambda=" + params.lambda.str();
    if (k_family == KFamily::R3Delta) s += " delta=" + params.delta.str();
    return s;
  }
};

/// The matrix of the rank-one generator t in the normal form of its type.
inline Matrix rep_matrix(const CaseSpec& spec) {
  const Rational &eta = spec.params.eta, &nu = spec.params.nu, &mu = spec.params.mu;
  if (spec.h_target == HTarget::R3) {
    switch (spec.rep_type) {
      case RepType::I: return Matrix{{eta, 0, 0}, {0, nu, 0}, {0, 0, mu}};
      case RepType::II: return Matrix{{eta, 0, 0}, {0, nu, -mu}, {0, mu, nu}};
      case RepType::III: return Matrix{{eta, 0, 0}, {0, nu, 1}, {0, 0, nu}};
      case RepType::IV: return Matrix{{eta, 1, 0}, {0, eta, 1}, {0, 0, eta}};
    }
  } else {
    switch (spec.rep_type) {
      case RepType::I: return Matrix{{eta, nu, 0}, {mu, -eta, 0}, {0, 0, 0}};
      case RepType::II: return Matrix{{eta, nu, 0}, {mu, Rational(1) - eta, 0}, {0, 0, 1}};
      default: break;
    }
  }
  throw ValidationError("rep_matrix: invalid type/target combination");
}

/// pi(e1) = t, pi(e2) = eps1 t, pi(e3) = eps2 t with the forced zeros applied.
inline Representation build_rep(const CaseSpec& spec) {
  Matrix t = rep_matrix(spec);
  return Representation(spec.k(), spec.h(),
                        {t, spec.params.eps1 * t, spec.params.eps2 * t});
}

/// A rank-one representation exists iff k is not perfect: pi must vanish on
/// the derived subalgebra, so C^1(k) = k forces pi = 0.
inline bool rank_one_rep_exists(const LieAlgebra& k) {
  return k.derived_subalgebra().dim() < k.dim();
}

/// Brute-force counterpart: actually search for a linear functional vanishing
/// on C^1(k) and assemble the rank-one representation c (x) t, t = identity.
inline std::optional<Representation> construct_rank_one_rep(const LieAlgebra& k) {
  Subspace derived = k.derived_subalgebra();
  // functionals killing the derived subalgebra = kernel of basis^T
  std::vector<Vector> funcs = kernel_basis(derived.basis().transpose());
  for (const Vector& c : funcs) {
    if (c.is_zero()) continue;
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < k.dim(); ++i) mats.push_back(c[i] * Matrix::identity(k.dim()));
    Representation rep(k, LieAlgebra(StructureConstants{k.dim(), {}}), std::move(mats));
    if (rep.is_valid()) return rep;
  }
  return std::nullopt;
}

/// The 9 x 9 linear system of the cocycle equation
///   0 = pi(e_i) j(e_k) - pi(e_k) j(e_i) - j([e_i, e_k])
/// assembled directly from the structure constants, independent of the
/// cohomology module's d1 (the two are compared as an invariant).
/// Rows: pairs (1,2), (1,3), (2,3), three h-coordinates each.
/// Columns: j41, j42, j43, j51, ..., j63.
inline Matrix assemble_cocycle_system(const CaseSpec& spec) {
  LieAlgebra k = spec.k();
  Matrix t = rep_matrix(spec);
  const Rational coeff[3] = {1, spec.params.eps1, spec.params.eps2};
  Matrix sys(9, 9);
  std::size_t block = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t kk = i + 1; kk < 3; ++kk, ++block) {
      Vector br = k.basis_bracket(i, kk);
      for (std::size_t out = 0; out < 3; ++out) {
        std::size_t row = block * 3 + out;
        for (std::size_t r = 0; r < 3; ++r) {
          sys(row, 3 * r + kk) += coeff[i] * t(out, r);
          sys(row, 3 * r + i) -= coeff[kk] * t(out, r);
        }
        for (std::size_t l = 0; l < 3; ++l)
          if (!br[l].is_zero()) sys(row, 3 * out + l) -= br[l];
      }
    }
  return sys;
}

inline Matrix reshape_j(const Vector& flat) {
  Matrix m(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = flat[3 * r + c];
  return m;
}

struct SearchLogEntry {
  std::vector<Rational> coefficients;
  Rational det;
};

struct WitnessSearch {
  std::optional<OneCochain> witness;
  /// Absence of a witness is a proof (grid-complete polynomial identity
  /// test over the kernel) only when certified is true.
  bool certified = false;
  std::size_t combos_tried = 0;
  std::vector<SearchLogEntry> log;  // bounded prefix plus the successful combination
};

namespace detail {

inline constexpr std::size_t kLogLimit = 32;
inline constexpr std::size_t kRandomDraws = 10000;

inline void log_try(WitnessSearch& out, const std::vector<Rational>& c, const Rational& d, bool success) {
  if (out.log.size() < kLogLimit || success) out.log.push_back({c, d});
}

}  // namespace detail

/// Searches the span of the kernel basis for an invertible 3 x 3 reshaped
/// element. Deterministic order: a low-weight pass (at most three nonzero
/// coefficients from {1, -1, 2}), then the full grid {0, 1, -1, 2}^d for
/// d <= 6, then seeded random draws from {-3..3}^d. The reshaped determinant
/// is a polynomial of total degree 3 in the coefficients, so exhausting a
/// grid with four values per variable decides whether it vanishes on the
/// whole span: for d <= 6 a miss is a certificate of absence.
inline WitnessSearch find_invertible_witness(const std::vector<Vector>& kernel, unsigned seed = 20240915) {
  WitnessSearch out;
  const std::size_t d = kernel.size();
  if (d == 0) {
    out.certified = true;
    return out;
  }
  std::vector<Matrix> basis;
  basis.reserve(d);
  for (const auto& v : kernel) basis.push_back(reshape_j(v));

  auto attempt = [&](const std::vector<Rational>& c) -> bool {
    Matrix m(3, 3);
    for (std::size_t i = 0; i < d; ++i)
      if (!c[i].is_zero()) m += c[i] * basis[i];
    Rational det = determinant(m);
    ++out.combos_tried;
    bool hit = !det.is_zero();
    detail::log_try(out, c, det, hit);
    if (hit) out.witness = OneCochain(std::move(m));
    return hit;
  };

  // low-weight pass
  const Rational low[] = {1, -1, 2};
  std::vector<Rational> c(d, Rational(0));
  for (std::size_t w = 1; w <= std::min<std::size_t>(3, d); ++w) {
    std::vector<std::size_t> idx(w);
    auto sweep = [&](auto&& self, std::size_t slot, std::size_t start) -> bool {
      if (slot == w) {
        std::vector<std::size_t> val(w, 0);
        while (true) {
          for (std::size_t i = 0; i < w; ++i) c[idx[i]] = low[val[i]];
          bool hit = attempt(c);
          for (std::size_t i = 0; i < w; ++i) c[idx[i]] = 0;
          if (hit) return true;
          std::size_t p = 0;
          while (p < w && ++val[p] == 3) val[p++] = 0;
          if (p == w) return false;
        }
      }
      for (std::size_t i = start; i < d; ++i) {
        idx[slot] = i;
        if (self(self, slot + 1, i + 1)) return true;
      }
      return false;
    };
    if (sweep(sweep, 0, 0)) return out;
  }

  if (d <= 6) {
    // full grid enumeration; a miss certifies det = 0 on the span
    const Rational grid[] = {0, 1, -1, 2};
    std::vector<std::size_t> val(d, 0);
    while (true) {
      bool all_zero = true;
      for (std::size_t i = 0; i < d; ++i) {
        c[i] = grid[val[i]];
        if (val[i] != 0) all_zero = false;
      }
      if (!all_zero && attempt(c)) return out;
      std::size_t p = 0;
      while (p < d && ++val[p] == 4) val[p++] = 0;
      if (p == d) break;
    }
    out.certified = true;
    return out;
  }

  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-3, 3);
  for (std::size_t draw = 0; draw < detail::kRandomDraws; ++draw) {
    for (std::size_t i = 0; i < d; ++i) c[i] = dist(rng);
    if (attempt(c)) return out;
  }
  return out;
}

struct SolveResult {
  Matrix system;
  std::vector<Vector> kernel;
  std::size_t kernel_dim = 0;
  std::optional<OneCochain> witness;
  bool no_witness_certified = false;
  bool verified = false;
  std::size_t combos_tried = 0;
  std::vector<SearchLogEntry> search_log;
};

/// Full verification of a constructed pair: block J against the built
/// algebra, integrability, and totally-real classification of both factors.
inline bool verify_witness(const CaseSpec& spec, const OneCochain& j) {
  Representation pi = build_rep(spec);
  ExtendedAlgebra ext = spec.h_target == HTarget::R3
                            ? semidirect(pi)
                            : build_extension(ExtensionData(pi, alpha_from_j(pi.target(), j)));
  AlmostComplexStructure full = J_from_cocycle(ext, j);
  if (!is_integrable(ext.algebra(), full)) return false;
  if (subspace_type(full, ext.k_subspace()) != SubspaceType::TotallyReal) return false;
  if (subspace_type(full, ext.h_subspace()) != SubspaceType::TotallyReal) return false;
  return true;
}

/// assemble -> kernel -> witness search -> construct and verify.
/// Absence of a witness is a result, not an error.
inline SolveResult solve_case(const CaseSpec& spec, unsigned seed = 20240915) {
  SolveResult result;
  result.system = assemble_cocycle_system(spec);
  result.kernel = kernel_basis(result.system);
  result.kernel_dim = result.kernel.size();
  WitnessSearch search = find_invertible_witness(result.kernel, seed);
  result.combos_tried = search.combos_tried;
  result.search_log = std::move(search.log);
  result.no_witness_certified = !search.witness && search.certified;
  if (search.witness) {
    result.witness = std::move(search.witness);
    result.verified = verify_witness(spec, *result.witness);
  }
  return result;
}

/// Default parameter grid {-2, -1, -1/2, 0, 1/2, 1, 2}; eps values use {0, 1}.
inline const std::vector<Rational>& default_grid() {
  static const std::vector<Rational> g{-2, -1, Rational(-1, 2), 0, Rational(1, 2), 1, 2};
  return g;
}
inline const std::vector<Rational>& nonzero_grid() {
  static const std::vector<Rational> g{-2, -1, Rational(-1, 2), Rational(1, 2), 1, 2};
  return g;
}
inline const std::vector<Rational>& eps_grid() {
  static const std::vector<Rational> g{0, 1};
  return g;
}

}  // namespace liext

#endif
