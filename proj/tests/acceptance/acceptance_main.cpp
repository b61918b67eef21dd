// Acceptance suite: one criterion per section, one pass/fail line each.
// Every tolerance here is exact (rational arithmetic); runtime budgets are
// asserted where the criterion carries one.

#include <chrono>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "liext/tables.hpp"

using namespace liext;

namespace {

struct Criterion {
  int id;
  std::string title;
  bool pass;
  std::string detail;
  double seconds;
};

std::vector<Criterion> g_results;

template <typename Fn>
void criterion(int id, const std::string& title, Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = fn(detail);
  } catch (const std::exception& e) {
    pass = false;
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  g_results.push_back({id, title, pass, detail, secs});
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << title << " (" << secs
       << "s)" << (detail.empty() ? "" : " -- " + detail);
  std::cout << line.str() << std::endl;
}

Vector e(std::size_t n, std::size_t i) { return Vector::unit(n, i); }

Matrix rot2() { return Matrix{{0, -1}, {1, 0}}; }

Matrix random_inner_product(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  Matrix a(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a(r, c) = Rational(num(rng), den(rng));
  return a.transpose() * a + Matrix::identity(n);
}

Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 2);
  while (true) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(num(rng), den(rng));
    if (!determinant(m).is_zero()) return m;
  }
}

Matrix block_j_matrix(const Matrix& j) {
  const std::size_t n = j.rows();
  Matrix full(2 * n, 2 * n);
  full.set_block(0, n, -inverse(j));
  full.set_block(n, 0, j);
  return full;
}

const Rational kParamGrid[] = {-2, -1, {-1, 2}, 0, {1, 2}, 1, 2};

// ---------------------------------------------------------------- criteria

bool catalog_soundness(std::string& detail) {
  std::size_t algebras = 0;
  for (CatalogName n : {CatalogName::R3, CatalogName::H1, CatalogName::R3_3, CatalogName::SO3,
                        CatalogName::SL2}) {
    if (!jacobi_defect(catalog(n).structure_constants()).empty()) return false;
    ++algebras;
  }
  for (const Rational& p : kParamGrid) {
    for (CatalogName n : {CatalogName::R3Lambda, CatalogName::R3Delta}) {
      if (!jacobi_defect(catalog(n, p).structure_constants()).empty()) return false;
      ++algebras;
    }
  }
  detail = std::to_string(algebras) + " catalog instances exact under Jacobi";
  return true;
}

bool lemma_rank_one(std::string& detail) {
  bool ok = !rank_one_rep_exists(catalog(CatalogName::SL2)) &&
            !rank_one_rep_exists(catalog(CatalogName::SO3)) &&
            rank_one_rep_exists(catalog(CatalogName::H1)) &&
            rank_one_rep_exists(catalog(CatalogName::R3_3));
  for (const Rational& p : kParamGrid) {
    ok = ok && rank_one_rep_exists(catalog(CatalogName::R3Lambda, p)) &&
         rank_one_rep_exists(catalog(CatalogName::R3Delta, p));
  }
  // brute force: explicit construction succeeds exactly when the predicate holds
  for (CatalogName n : {CatalogName::R3, CatalogName::H1, CatalogName::R3_3, CatalogName::SO3,
                        CatalogName::SL2}) {
    LieAlgebra k = catalog(n);
    ok = ok && (construct_rank_one_rep(k).has_value() == rank_one_rep_exists(k));
  }
  detail = "simple families excluded, solvable families admit rank-one actions";
  return ok;
}

bool table_reproduction(int table, std::string& detail, const WitnessCallback* cb = nullptr) {
  TableReport report = reproduce_table(table, 20240915, cb);
  std::size_t no_rows = 0, certified = 0, points = 0;
  for (const auto& r : report.rows) {
    if (!r.match) {
      detail = "row " + std::string(to_string(r.row.k_family)) + "/" + to_string(r.row.rep_type) +
               " " + r.row.block + " observed " + r.observed;
      return false;
    }
    if (!r.row.yes) {
      ++no_rows;
      points += r.points;
      certified += r.certified_absent;
    }
  }
  if (certified != points) {
    detail = "only " + std::to_string(certified) + "/" + std::to_string(points) +
             " absent verdicts carry the grid-complete certificate";
    return false;
  }
  detail = std::to_string(report.rows.size()) + " rows match; all " + std::to_string(points) +
           " 'no' points certified";
  return true;
}

bool witness_corpus(std::string& detail) {
  std::mt19937 rng(20240915);
  std::size_t real_families = 0;
  for (const auto& f : known_solution_witnesses()) {
    if (f.complex_only) continue;
    ++real_families;
    FamilyInstanceCheck check = check_family_instance(f, f.default_params, f.default_entries);
    if (!check.ok()) {
      detail = f.id + " failed (det_formula=" + std::to_string(check.det_formula_matches) +
               " cocycle=" + std::to_string(check.is_cocycle) +
               " verified=" + std::to_string(check.verified) + ")";
      return false;
    }
    // integrability is independent of the block sign convention
    {
      CaseSpec spec = f.spec(f.default_params, f.default_entries);
      Representation pi = build_rep(spec);
      OneCochain j(f.shape(f.derive(f.default_params, f.default_entries), f.default_entries));
      ExtendedAlgebra ext = spec.h_target == HTarget::R3
                                ? semidirect(pi)
                                : build_extension(ExtensionData(pi, alpha_from_j(pi.target(), j)));
      AlmostComplexStructure flipped = J_from_cocycle(ext, j, BlockSign::Flipped);
      if (!is_integrable(ext.algebra(), flipped)) {
        detail = f.id + ": flipped block sign lost integrability";
        return false;
      }
    }
    for (int trial = 0; trial < 3; ++trial) {
      EntryMap entries = random_family_entries(f, rng);
      CaseParams c = f.derive(f.default_params, entries);
      if (f.det(c, entries) != determinant(f.shape(c, entries))) {
        detail = f.id + " determinant formula mismatch on a random instantiation";
        return false;
      }
    }
  }
  detail = std::to_string(real_families) + " real families verified end-to-end";
  return true;
}

bool cohomology_identities(std::string& detail) {
  std::mt19937 rng(4242);
  std::vector<Representation> pool;
  {
    CaseParams p;
    p.eps1 = 1;
    pool.push_back(build_rep(CaseSpec(KFamily::H1, HTarget::R3, RepType::III, p)));
    CaseParams q;
    q.eta = 1; q.nu = Rational(1, 2); q.mu = -2;
    pool.push_back(build_rep(CaseSpec(KFamily::R3, HTarget::R3, RepType::I, q)));
    CaseParams r;
    r.eta = 1; r.nu = 1; r.mu = -1; r.lambda = 1;
    pool.push_back(build_rep(CaseSpec(KFamily::R3Lambda, HTarget::H1, RepType::II, r)));
    pool.push_back(Representation::adjoint(catalog(CatalogName::SL2)));
    pool.push_back(Representation::adjoint(catalog(CatalogName::SO3)));
    pool.push_back(Representation::coadjoint(catalog(CatalogName::H1)));
    pool.push_back(Representation::coadjoint(catalog(CatalogName::R3_3)));
    CaseParams s;
    s.eta = -1; s.nu = 2; s.mu = Rational(1, 2); s.delta = 1;
    pool.push_back(build_rep(CaseSpec(KFamily::R3Delta, HTarget::R3, RepType::II, s)));
  }
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  std::size_t instances = 0;
  for (int trial = 0; trial < 1100; ++trial) {
    const Representation& rho = pool[trial % pool.size()];
    Matrix theta(rho.target().dim(), rho.source().dim());
    for (std::size_t r = 0; r < theta.rows(); ++r)
      for (std::size_t c = 0; c < theta.cols(); ++c) theta(r, c) = Rational(num(rng), den(rng));
    if (!d2(rho, d1(rho, OneCochain(theta))).is_zero()) {
      detail = "d2(d1(theta)) nonzero at instance " + std::to_string(trial);
      return false;
    }
    Vector h(rho.target().dim());
    for (std::size_t i = 0; i < h.dim(); ++i) h[i] = Rational(num(rng), den(rng));
    if (!d1(rho, coboundary_of(rho, h)).is_zero()) {
      detail = "a coboundary failed the cocycle equation at instance " + std::to_string(trial);
      return false;
    }
    ++instances;
  }
  detail = std::to_string(instances) + " random (representation, cochain) instances, exact";
  return true;
}

bool p22_both_directions(std::string& detail) {
  // forward: every real corpus witness yields an integrable structure
  std::size_t forward = 0;
  for (const auto& f : known_solution_witnesses()) {
    if (f.complex_only) continue;
    CaseSpec spec = f.spec(f.default_params, f.default_entries);
    Matrix j = f.shape(f.derive(f.default_params, f.default_entries), f.default_entries);
    if (!verify_witness(spec, OneCochain(j))) {
      detail = f.id + ": forward direction failed";
      return false;
    }
    ++forward;
  }

  // converse: perturbations off the cocycle space always break integrability.
  // Sources are chosen with proper kernels at their default parameters; a
  // degenerate pick (perturbation still a cocycle, or singular) is redrawn.
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> coord(0, 8), bump(1, 3);
  std::vector<std::string> sources = {"T1.I.iii.1", "T1.II.iv.1", "T1.III.i.4", "T1.IV.ii.1",
                                      "T2.I.i.1", "T2.III.ii.2", "T2.IV.ii.2"};
  std::size_t converse = 0, attempt = 0;
  while (converse < 100) {
    const WitnessFamily& f = witness_family(sources[attempt++ % sources.size()]);
    CaseSpec spec = f.spec(f.default_params, f.default_entries);
    Matrix sys = assemble_cocycle_system(spec);
    Matrix j = f.shape(f.derive(f.default_params, f.default_entries), f.default_entries);
    Vector flat = flatten_j(j);
    flat[coord(rng)] += bump(rng);
    if ((sys * flat).is_zero()) continue;  // landed back in the kernel
    Matrix perturbed = reshape_j(flat);
    if (determinant(perturbed).is_zero()) continue;

    // raw bracket structure, bypassing validation: h = R3 is always a Lie
    // algebra; for h = h1 the forced structure may not be, but the Nijenhuis
    // evaluation on the raw brackets is exactly the obstruction of interest
    Representation pi = build_rep(spec);
    ExtensionData data(pi, spec.h_target == HTarget::R3 ? ExtensionData::zero_alpha(pi)
                                                         : alpha_from_j(pi.target(), OneCochain(perturbed)));
    LieAlgebra raw = force_extension_algebra(data);
    AlmostComplexStructure bad(block_j_matrix(perturbed));
    bool nonzero = false;
    for (std::size_t a = 0; a < 6 && !nonzero; ++a)
      for (std::size_t b = a + 1; b < 6 && !nonzero; ++b)
        if (!nijenhuis(raw, bad, e(6, a), e(6, b)).is_zero()) nonzero = true;
    if (!nonzero) {
      detail = "a non-cocycle perturbation of " + f.id + " stayed integrable";
      return false;
    }
    ++converse;
  }
  detail = std::to_string(forward) + " witnesses integrable; 100 perturbations all break";
  return true;
}

bool p3_metrics(std::string& detail) {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix b = random_inner_product(rng, 3);
    Matrix j = random_invertible(rng, 3);
    OneCochain jc(j);
    AlmostComplexStructure full(block_j_matrix(j));
    Metric herm = hermitian_from_B(b, jc);
    Metric anti = anti_hermitian_from_B(b, jc);
    if (!is_hermitian(herm, full) || is_anti_hermitian(herm, full)) {
      detail = "hermitian_from_B produced a non-Hermitian metric at trial " + std::to_string(trial);
      return false;
    }
    if (!is_anti_hermitian(anti, full) || is_hermitian(anti, full)) {
      detail = "anti_hermitian_from_B produced a non-anti-Hermitian metric at trial " +
               std::to_string(trial);
      return false;
    }
    Subspace k_range = Subspace::span({e(6, 0), e(6, 1), e(6, 2)}, 6);
    Subspace h_range = Subspace::span({e(6, 3), e(6, 4), e(6, 5)}, 6);
    if (subspace_metric_type(anti, k_range) != MetricSubspaceType::TotallyIsotropic ||
        subspace_metric_type(anti, h_range) != MetricSubspaceType::TotallyIsotropic) {
      detail = "k or h not totally isotropic under the split-pair metric at trial " +
               std::to_string(trial);
      return false;
    }
    if (subspace_metric_type(herm, k_range) != MetricSubspaceType::NonDegenerate) {
      detail = "k degenerate under the orthogonal-sum metric at trial " + std::to_string(trial);
      return false;
    }
  }
  detail = "100 random (B, j) pairs, both compatibility classes and isotropy exact";
  return true;
}

bool corollary_p1(std::string& detail) {
  std::mt19937 rng(5150);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
  LieAlgebra k2(StructureConstants{2, {}}), h2(StructureConstants{2, {}});
  AlmostComplexStructure j1(rot2()), j2(rot2());
  std::size_t checks = 0, satisfied = 0, mutated = 0;

  // satisfying corpus: pi lands in the commutant of J2, alpha arbitrary central
  for (int trial = 0; trial < 40; ++trial) {
    Matrix pi1 = Rational(num(rng), den(rng)) * Matrix::identity(2) + Rational(num(rng), den(rng)) * rot2();
    Matrix pi2 = Rational(num(rng), den(rng)) * Matrix::identity(2) + Rational(num(rng), den(rng)) * rot2();
    Representation pi(k2, h2, {pi1, pi2});
    TwoCochain alpha(2, 2);
    alpha.set_pair(0, 1, Vector{Rational(num(rng), den(rng)), Rational(num(rng), den(rng))});
    ExtendedAlgebra ext = build_extension(ExtensionData(pi, alpha));
    if (!is_holomorphic_action(pi, j2)) continue;
    for (Eps eps : {Eps::Plus, Eps::Minus}) {
      auto [jf, report] = complex_ideal_J(ext, j1, j2, eps);
      ++checks;
      if (!report.consistent()) {
        detail = "conditions and Nijenhuis disagree on a holomorphic instance";
        return false;
      }
      if (report.integrable) ++satisfied;
    }
  }

  // single-condition mutations
  for (int trial = 0; trial < 30; ++trial) {
    // (i) broken: a non-commuting action, alpha = 0
    Matrix bad_action{{1, Rational(num(rng), den(rng))}, {0, -1}};
    Representation pi_bad(k2, h2, {bad_action, Matrix::zero(2, 2)});
    ExtendedAlgebra ext_bad = build_extension(ExtensionData(pi_bad, TwoCochain(2, 2)));
    auto [jf1, r1] = complex_ideal_J(ext_bad, j1, j2, Eps::Plus);
    ++checks;
    ++mutated;
    if (r1.condition_i || !r1.consistent()) {
      detail = "mutated action: condition (i) evaluation disagrees with the tensor";
      return false;
    }

    // (ii) broken: 4D abelian k with a J1-incompatible alpha, pi = 0
    LieAlgebra k4(StructureConstants{4, {}});
    Matrix j4(4, 4);
    j4(2, 0) = 1; j4(0, 2) = -1; j4(3, 1) = 1; j4(1, 3) = -1;
    AlmostComplexStructure j1_4(j4);
    Representation pi0(k4, h2, std::vector<Matrix>(4, Matrix::zero(2, 2)));
    TwoCochain alpha_bad(4, 2);
    alpha_bad.set_pair(0, 1, Vector{1, Rational(num(rng), den(rng))});
    ExtendedAlgebra ext_bad2 = build_extension(ExtensionData(pi0, alpha_bad));
    auto [jf2, r2] = complex_ideal_J(ext_bad2, j1_4, j2, Eps::Plus);
    ++checks;
    ++mutated;
    if (r2.condition_ii || r2.condition_i == false || !r2.consistent()) {
      detail = "mutated alpha: condition (ii) evaluation disagrees with the tensor";
      return false;
    }
  }
  detail = std::to_string(checks) + " instances (" + std::to_string(satisfied) + " integrable, " +
           std::to_string(mutated) + " mutated), zero disagreements";
  return checks > 0;
}

bool symplectic_results(std::string& detail) {
  // isotropic ideals across the constructed corpus are abelian
  LieAlgebra r3 = catalog(CatalogName::R3);
  Representation pi0(r3, r3, std::vector<Matrix>(3, Matrix::zero(3, 3)));
  std::size_t instances = 0;
  for (int which = 0; which < 3; ++which) {
    TwoCochain alpha(3, 3);
    if (which == 0) alpha.set_pair(0, 1, e(3, 0));
    if (which == 1) { alpha.set_pair(0, 1, e(3, 0)); alpha.set_pair(0, 2, e(3, 0)); }
    // which == 2: alpha = 0 (abelian R^6)
    ExtendedAlgebra g = build_extension(ExtensionData(pi0, alpha));
    Matrix w(6, 6);
    w.set_block(0, 3, Matrix::identity(3));
    w.set_block(3, 0, -Matrix::identity(3));
    SymplecticForm omega(w, g.algebra());
    if (!omega.closed()) {
      detail = "expected closed pairing on the nilpotent double";
      return false;
    }
    auto report = isotropic_ideal_report(g.algebra(), omega, g.h_subspace());
    if (!report.asserted || !report.h_abelian) {
      detail = "isotropic ideal not confirmed abelian";
      return false;
    }
    ++instances;
  }

  // Lagrangian ideal with a complex structure: Jh is a subalgebra
  {
    TwoCochain alpha(3, 3);
    alpha.set_pair(0, 1, e(3, 0));
    ExtendedAlgebra g = build_extension(ExtensionData(pi0, alpha));
    Matrix jm(6, 6);
    jm(1, 0) = 1; jm(0, 1) = -1;
    jm(2, 3) = 1; jm(3, 2) = -1;
    jm(5, 4) = 1; jm(4, 5) = -1;
    AlmostComplexStructure j(jm);
    Matrix w(6, 6);
    w.set_block(0, 3, Matrix::identity(3));
    w.set_block(3, 0, -Matrix::identity(3));
    SymplecticForm omega(w, g.algebra());
    auto report = jh_subalgebra_check(g.algebra(), omega, j, g.h_subspace());
    if (!report.hypotheses_met || !report.jh_subalgebra) {
      detail = "Jh subalgebra conclusion failed on the nilpotent double";
      return false;
    }
    ++instances;

    // abelian full-split case with the totally real Lagrangian ideal
    LieAlgebra flat(StructureConstants{6, {}});
    AlmostComplexStructure jf(block_j_matrix(Matrix::identity(3)));
    SymplecticForm omega_f(w, flat);
    auto report_f = jh_subalgebra_check(flat, omega_f, jf,
                                        Subspace::span({e(6, 3), e(6, 4), e(6, 5)}, 6));
    if (!report_f.hypotheses_met || !report_f.jh_subalgebra || !report_f.totally_real ||
        !report_f.semidirect_decomposition) {
      detail = "totally real Lagrangian ideal did not produce the semidirect splitting";
      return false;
    }
    ++instances;
  }

  // generalized complex structures of symplectic type
  {
    LieAlgebra k2(StructureConstants{2, {}});
    AlmostComplexStructure j = gcs_from_cocycle(k2, OneCochain(rot2()));
    GcsReport report = gcs_check(k2, j);
    if (!report.ok() || !report.type.symplectic_type) {
      detail = "abelian R^2 symplectic-type structure failed its checks";
      return false;
    }
    ++instances;

    LieAlgebra nil4(StructureConstants{4, {{0, 1, 2, 1}}});
    auto cocycle = find_symplectic_cocycle(nil4);
    if (!cocycle) {
      detail = "no symplectic cocycle found on the 4D nilpotent example";
      return false;
    }
    GcsReport nil_report = gcs_check(nil4, gcs_from_cocycle(nil4, *cocycle));
    if (!nil_report.ok() || !nil_report.type.symplectic_type) {
      detail = "4D nilpotent symplectic-type structure failed its checks";
      return false;
    }
    ++instances;
  }
  detail = std::to_string(instances) + " symplectic instances, all conclusions verified";
  return true;
}

bool product_structures(std::string& detail) {
  std::size_t semidirect_count = 0, twisted = 0;
  for (const auto& f : known_solution_witnesses()) {
    if (f.complex_only) continue;
    CaseSpec spec = f.spec(f.default_params, f.default_entries);
    Representation pi = build_rep(spec);
    OneCochain j(f.shape(f.derive(f.default_params, f.default_entries), f.default_entries));
    ExtendedAlgebra ext = spec.h_target == HTarget::R3
                              ? semidirect(pi)
                              : build_extension(ExtensionData(pi, alpha_from_j(pi.target(), j)));
    AlmostProductStructure e_split(ext.product_structure());
    ProductStructureReport report = product_structure_checks(ext.algebra(), e_split);
    if (!report.criteria_agree()) {
      detail = f.id + ": bracket identity and eigenspace criteria disagree";
      return false;
    }
    if (spec.h_target == HTarget::R3) {
      if (!report.integrable()) {
        detail = f.id + ": semidirect splitting E unexpectedly non-integrable";
        return false;
      }
      ++semidirect_count;
    } else {
      if (report.integrable()) {
        detail = f.id + ": alpha_j != 0 splitting E unexpectedly integrable";
        return false;
      }
      ++twisted;
    }
    AlmostComplexStructure full = J_from_cocycle(ext, j);
    if (!is_complex_product_pair(full, e_split)) {
      detail = f.id + ": JE != -EJ";
      return false;
    }
  }
  detail = std::to_string(semidirect_count) + " semidirect splittings integrable, " +
           std::to_string(twisted) + " twisted ones not, all pairs anticommute";
  return true;
}

}  // namespace

bool within(double seconds, double budget, std::string& detail) {
  if (seconds <= budget) return true;
  detail += (detail.empty() ? "" : "; ");
  detail += "runtime " + std::to_string(seconds) + "s exceeds the " + std::to_string(budget) +
            "s budget";
  return false;
}

int main() {
  criterion(1, "catalog soundness over the parameter grid (< 1s)", [](std::string& d) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = catalog_soundness(d);
    return ok && within(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 1.0, d);
  });
  criterion(2, "rank-one representation lemma (< 1s)", [](std::string& d) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = lemma_rank_one(d);
    return ok && within(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 1.0, d);
  });
  criterion(3, "table 1 reproduction over the default grid (< 5min)", [](std::string& d) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = table_reproduction(1, d);
    return ok && within(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 300.0, d);
  });
  criterion(4, "table 2 reproduction with central 2-cocycle checks (< 5min)", [](std::string& d) {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t witnesses = 0;
    bool alpha_ok = true;
    WitnessCallback cb = [&](const CaseSpec& spec, const OneCochain& j) {
      ++witnesses;
      Representation pi = build_rep(spec);
      TwoCochain alpha = alpha_from_j(pi.target(), j);
      Subspace z = pi.target().center();
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = a + 1; b < 3; ++b)
          if (!z.contains(alpha.on_pair(a, b))) alpha_ok = false;
      if (!is_two_cocycle(pi, alpha)) alpha_ok = false;
    };
    bool ok = table_reproduction(2, d, &cb);
    if (!alpha_ok) {
      d = "a verified witness produced a non-central or non-cocycle alpha_j";
      return false;
    }
    d += "; " + std::to_string(witnesses) + " witnesses passed the alpha_j checks";
    return ok && within(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 300.0, d);
  });
  criterion(5, "witness corpus verifies end-to-end", witness_corpus);
  criterion(6, "cohomology identities on 1100 random instances", cohomology_identities);
  criterion(7, "cocycle construction, forward and converse", p22_both_directions);
  criterion(8, "Hermitian and anti-Hermitian metrics from an inner product", p3_metrics);
  criterion(9, "complex ideal integrability conditions", corollary_p1);
  criterion(10, "symplectic structure results and generalized complex structures", symplectic_results);
  criterion(11, "product structures of the splittings", product_structures);

  std::size_t passed = 0;
  for (const auto& c : g_results) passed += c.pass ? 1 : 0;
  std::cout << passed << "/" << g_results.size() << " acceptance criteria passed" << std::endl;
  return passed == g_results.size() ? 0 : 1;
}
