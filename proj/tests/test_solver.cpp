#include <catch2/catch_amalgamated.hpp>

#include "liext/solver.hpp"
#include "liext/tables.hpp"

using namespace liext;

namespace {

CaseParams params(Rational eta, Rational nu, Rational mu, Rational eps1 = 0, Rational eps2 = 0,
                  Rational lambda = 0, Rational delta = 0) {
  CaseParams c;
  c.eta = eta; c.nu = nu; c.mu = mu; c.eps1 = eps1; c.eps2 = eps2; c.lambda = lambda; c.delta = delta;
  return c;
}

}  // namespace

TEST_CASE("rep_matrix normal forms") {
  CaseSpec diag(KFamily::H1, HTarget::R3, RepType::I, params(1, 2, 3));
  CHECK(rep_matrix(diag) == Matrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});

  CaseSpec jordan(KFamily::H1, HTarget::R3, RepType::IV, params(0, 0, 0));
  CHECK(rep_matrix(jordan) == Matrix{{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});

  CaseSpec rot(KFamily::R3, HTarget::R3, RepType::II, params(1, 2, 3));
  CHECK(rep_matrix(rot) == Matrix{{1, 0, 0}, {0, 2, -3}, {0, 3, 2}});

  CaseSpec der(KFamily::H1, HTarget::H1, RepType::II, params(0, 0, 0));
  CHECK(rep_matrix(der) == Matrix{{0, 0, 0}, {0, 1, 0}, {0, 0, 1}});

  CHECK_THROWS_AS(CaseSpec(KFamily::H1, HTarget::H1, RepType::III, params(0, 0, 0)), ValidationError);
  CHECK_THROWS_AS(CaseSpec(KFamily::H1, HTarget::H1, RepType::IV, params(0, 0, 0)), ValidationError);
}

TEST_CASE("derivation targets really act by derivations") {
  for (RepType t : {RepType::I, RepType::II}) {
    for (int eta = -2; eta <= 2; ++eta) {
      CaseSpec spec(KFamily::H1, HTarget::H1, t, params(eta, 1, -1));
      CHECK(catalog(CatalogName::H1).is_derivation(rep_matrix(spec)));
    }
  }
}

TEST_CASE("eps coefficients are forced to zero on the derived subalgebra") {
  CaseSpec h1(KFamily::H1, HTarget::R3, RepType::I, params(1, 1, 1, 5, 7));
  CHECK(h1.params.eps1 == Rational(5));
  CHECK(h1.params.eps2 == Rational(0));

  CaseSpec r3(KFamily::R3, HTarget::R3, RepType::I, params(1, 1, 1, 5, 7));
  CHECK(r3.params.eps1 == Rational(0));
  CHECK(r3.params.eps2 == Rational(0));

  CaseParams with_lambda = params(1, 1, 1, 5, 7);
  with_lambda.lambda = 0;
  CaseSpec rl0(KFamily::R3Lambda, HTarget::R3, RepType::I, with_lambda);
  CHECK(rl0.params.eps1 == Rational(0));
  CHECK(rl0.params.eps2 == Rational(7));

  with_lambda.lambda = 2;
  CaseSpec rl2(KFamily::R3Lambda, HTarget::R3, RepType::I, with_lambda);
  CHECK(rl2.params.eps2 == Rational(0));

  CaseParams with_delta = params(1, 1, 1, 5, 7);
  with_delta.delta = 1;
  CaseSpec rd(KFamily::R3Delta, HTarget::R3, RepType::I, with_delta);
  CHECK(rd.params.eps1 == Rational(0));
  CHECK(rd.params.eps2 == Rational(0));

  // the built representation is always valid
  CHECK(build_rep(h1).is_valid());
  CHECK(build_rep(rl0).is_valid());
}

TEST_CASE("rank-one representations exist exactly for non-perfect algebras") {
  CHECK_FALSE(rank_one_rep_exists(catalog(CatalogName::SL2)));
  CHECK_FALSE(rank_one_rep_exists(catalog(CatalogName::SO3)));
  CHECK(rank_one_rep_exists(catalog(CatalogName::H1)));
  CHECK(rank_one_rep_exists(catalog(CatalogName::R3_3)));
  for (const Rational& p : default_grid()) {
    CHECK(rank_one_rep_exists(catalog(CatalogName::R3Lambda, p)));
    CHECK(rank_one_rep_exists(catalog(CatalogName::R3Delta, p)));
  }

  // brute force agrees: an explicit rank-one representation is constructible
  // exactly when the predicate says so
  for (CatalogName n : {CatalogName::R3, CatalogName::H1, CatalogName::R3_3, CatalogName::SO3, CatalogName::SL2}) {
    LieAlgebra k = catalog(n);
    CHECK(construct_rank_one_rep(k).has_value() == rank_one_rep_exists(k));
  }
}

TEST_CASE("assembled system matches the cohomology route") {
  std::vector<CaseSpec> specs = {
      CaseSpec(KFamily::H1, HTarget::R3, RepType::III, params(0, 0, 0, 1)),
      CaseSpec(KFamily::R3, HTarget::R3, RepType::I, params(1, -1, Rational(1, 2))),
      CaseSpec(KFamily::R3Lambda, HTarget::R3, RepType::IV, params(1, 0, 0, 0, 1, 0)),
      CaseSpec(KFamily::R3Delta, HTarget::R3, RepType::II, params(1, 1, 2, 0, 0, 0, Rational(1, 2))),
      CaseSpec(KFamily::H1, HTarget::H1, RepType::I, params(0, 0, 1, 1)),
      CaseSpec(KFamily::R3Lambda, HTarget::H1, RepType::II, params(1, 0, 1, 0, 0, 1)),
  };
  for (const auto& spec : specs) {
    Matrix sys = assemble_cocycle_system(spec);
    Representation rho = build_rep(spec);
    // the kernels agree as solution sets
    auto sys_kernel = kernel_basis(sys);
    auto z1 = z1_basis(rho);
    REQUIRE(sys_kernel.size() == z1.size());
    for (const auto& v : sys_kernel) {
      OneCochain theta = cochain_from_flat(v, 3, 3);
      CHECK(d1(rho, theta).is_zero());
    }
    for (const auto& theta : z1) CHECK((sys * cochain_to_flat(theta)).is_zero());
  }
}

TEST_CASE("known rank and kernel dimensions") {
  // h1 acting through a type (iii) map with eta = nu = 0, eps1 = 1
  CaseSpec spec(KFamily::H1, HTarget::R3, RepType::III, params(0, 0, 0, 1));
  Matrix sys = assemble_cocycle_system(spec);
  CHECK(rank(sys) == 3);
  CHECK(kernel_basis(sys).size() == 6);

  // degenerate abelian-like case: trivial t on R3-target gives full kernel
  CaseSpec degenerate(KFamily::R3Lambda, HTarget::R3, RepType::I, params(0, 0, 0, 0, 0, 0));
  // k = r3_lambda(0) still brackets e1,e2, so the kernel is not full
  CHECK(kernel_basis(assemble_cocycle_system(degenerate)).size() == 6);
}

TEST_CASE("witness search on degenerate kernels") {
  CHECK_FALSE(find_invertible_witness({}).witness.has_value());
  CHECK(find_invertible_witness({}).certified);

  // the nine standard basis vectors: the identity matrix appears immediately
  std::vector<Vector> full;
  for (std::size_t i = 0; i < 9; ++i) full.push_back(Vector::unit(9, i));
  WitnessSearch search = find_invertible_witness(full);
  REQUIRE(search.witness.has_value());
  CHECK(search.witness->m == Matrix::identity(3));

  // a kernel whose matrices all kill the third column can never be invertible
  std::vector<Vector> rank_deficient;
  for (std::size_t i : {0, 1, 3, 4, 6, 7}) rank_deficient.push_back(Vector::unit(9, i));
  WitnessSearch none = find_invertible_witness(rank_deficient);
  CHECK_FALSE(none.witness.has_value());
  CHECK(none.certified);  // d = 6: grid-complete polynomial identity test
}

TEST_CASE("solve_case reproduces the marquee table entries") {
  // h1 / (iv) with eta = 0: witness exists and passes full verification
  SolveResult r1 = solve_case(CaseSpec(KFamily::H1, HTarget::R3, RepType::IV, params(0, 0, 0, 1)));
  REQUIRE(r1.witness.has_value());
  CHECK(r1.verified);

  // r3_delta(1) / (iv): certified no witness
  CaseParams d1p = params(1, 0, 0);
  d1p.delta = 1;
  SolveResult r2 = solve_case(CaseSpec(KFamily::R3Delta, HTarget::R3, RepType::IV, d1p));
  CHECK_FALSE(r2.witness.has_value());
  CHECK(r2.no_witness_certified);

  // h1 / (i) with eta=nu=0, mu=1 on the h1 target: alpha_j != 0 extension
  SolveResult r3 = solve_case(CaseSpec(KFamily::H1, HTarget::H1, RepType::I, params(0, 0, 1, 1)));
  REQUIRE(r3.witness.has_value());
  CHECK(r3.verified);
  Representation rho = build_rep(CaseSpec(KFamily::H1, HTarget::H1, RepType::I, params(0, 0, 1, 1)));
  TwoCochain alpha = alpha_from_j(rho.target(), *r3.witness);
  CHECK(is_two_cocycle(rho, alpha));
  CHECK_FALSE(alpha.is_zero());

  // h1 / (i) on the R3 target admits no witness at sampled points
  for (const Rational& eta : {Rational(0), Rational(1), Rational(-1)}) {
    SolveResult r4 = solve_case(CaseSpec(KFamily::H1, HTarget::R3, RepType::I, params(eta, 1, 2, 1)));
    CHECK_FALSE(r4.witness.has_value());
    CHECK(r4.no_witness_certified);
  }
}

TEST_CASE("every kernel vector solves the cocycle equation through d1") {
  CaseSpec spec(KFamily::R3, HTarget::R3, RepType::III, params(1, 1, 0));
  SolveResult res = solve_case(spec);
  Representation rho = build_rep(spec);
  for (const auto& v : res.kernel) CHECK(d1(rho, cochain_from_flat(v, 3, 3)).is_zero());
  REQUIRE(res.witness.has_value());
  CHECK(res.verified);
}

TEST_CASE("witness implies verification across a mixed sample") {
  std::vector<CaseSpec> sample = {
      CaseSpec(KFamily::H1, HTarget::R3, RepType::III, params(0, 0, 0, 0)),
      CaseSpec(KFamily::H1, HTarget::R3, RepType::III, params(2, 0, 0, 1)),
      CaseSpec(KFamily::R3, HTarget::R3, RepType::IV, params(1, 0, 0)),
      CaseSpec(KFamily::R3Lambda, HTarget::R3, RepType::I, params(1, 1, 1, 0, 0, 1)),
      CaseSpec(KFamily::R3Delta, HTarget::R3, RepType::II, params(1, 1, 2, 0, 0, 0, 2)),
      CaseSpec(KFamily::H1, HTarget::H1, RepType::I, params(1, 1, -1, 0)),
      CaseSpec(KFamily::R3Lambda, HTarget::H1, RepType::II, params(1, 0, 2, 0, 0, 1)),
  };
  for (const auto& spec : sample) {
    SolveResult res = solve_case(spec);
    if (res.witness) CHECK(res.verified);
  }
}

TEST_CASE("perturbing a witness off the kernel breaks integrability") {
  CaseSpec spec(KFamily::H1, HTarget::R3, RepType::III, params(0, 0, 0, 0));
  SolveResult res = solve_case(spec);
  REQUIRE(res.witness.has_value());

  Matrix sys = res.system;
  Representation rho = build_rep(spec);
  ExtendedAlgebra ext = semidirect(rho);
  int tested = 0;
  std::mt19937 rng(97);
  std::uniform_int_distribution<int> coord(0, 8), delta(1, 3);
  while (tested < 20) {
    Matrix j = res.witness->m;
    Vector flat = flatten_j(j);
    flat[coord(rng)] += delta(rng);
    if ((sys * flat).is_zero()) continue;  // still a cocycle, not a counterexample
    Matrix perturbed = reshape_j(flat);
    if (determinant(perturbed).is_zero()) continue;
    AlmostComplexStructure bad = J_from_cocycle(ext, OneCochain(perturbed));
    CHECK_FALSE(is_integrable(ext.algebra(), bad));
    ++tested;
  }
}

TEST_CASE("search log stays bounded and deterministic") {
  CaseSpec spec(KFamily::H1, HTarget::R3, RepType::I, params(0, 0, 0, 0));
  SolveResult a = solve_case(spec);
  SolveResult b = solve_case(spec);
  CHECK(a.combos_tried == b.combos_tried);
  CHECK(a.search_log.size() == b.search_log.size());
  CHECK(a.search_log.size() <= 33);
}

TEST_CASE("witness lies in the kernel and splitting recovers alpha_j") {
  // a Table 2 case: build the extension from the witness, split it back,
  // and compare the recovered alpha with alpha_j
  CaseSpec spec(KFamily::H1, HTarget::H1, RepType::I, params(0, 0, 1, 1));
  SolveResult res = solve_case(spec);
  REQUIRE(res.witness.has_value());
  CHECK((res.system * flatten_j(res.witness->m)).is_zero());

  Representation pi = build_rep(spec);
  TwoCochain alpha = alpha_from_j(pi.target(), *res.witness);
  ExtendedAlgebra ext = build_extension(ExtensionData(pi, alpha));
  ExtensionData recovered = split_extension(ext.algebra(), ext.h_subspace(), ext.k_subspace());
  CHECK(recovered.alpha == alpha);
  for (std::size_t i = 0; i < 3; ++i) CHECK(recovered.pi.matrix(i) == pi.matrix(i));
}

TEST_CASE("type (iii) case of the r3_lambda family has its permutation witness") {
  // lambda = 0, eta = 1, nu = 0: the kernel contains the cyclic permutation
  // with unit entries at j42, j53, j61 and determinant one
  CaseParams p = params(1, 0, 0);
  p.lambda = 0;
  CaseSpec spec(KFamily::R3Lambda, HTarget::R3, RepType::III, p);
  Matrix perm{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  CHECK((assemble_cocycle_system(spec) * flatten_j(perm)).is_zero());
  CHECK(determinant(perm) == Rational(1));
  CHECK(verify_witness(spec, OneCochain(perm)));
  SolveResult res = solve_case(spec);
  REQUIRE(res.witness.has_value());
  CHECK(res.verified);
}
