#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "liext/extension.hpp"

using namespace liext;

namespace {

Vector e(std::size_t n, std::size_t i) { return Vector::unit(n, i); }

Representation zero_rep(const LieAlgebra& k, const LieAlgebra& h) {
  return Representation(k, h, std::vector<Matrix>(k.dim(), Matrix::zero(h.dim(), h.dim())));
}

Matrix typet1_iii(const Rational& eta, const Rational& nu) {
  return Matrix{{eta, 0, 0}, {0, nu, 1}, {0, 0, nu}};
}

}  // namespace

TEST_CASE("validate_extension accepts semidirect data") {
  LieAlgebra r3 = catalog(CatalogName::R3);
  LieAlgebra h1 = catalog(CatalogName::H1);

  Representation rep(catalog(CatalogName::R3Lambda, Rational(0)), r3,
                     {typet1_iii(1, 0), Matrix::zero(3, 3), Matrix::zero(3, 3)});
  CHECK(validate_extension(ExtensionData(rep, ExtensionData::zero_alpha(rep))).ok());

  // tangent data: pi = ad, alpha = 0
  Representation ad = Representation::adjoint(h1);
  Representation tangent_rep(h1, catalog(CatalogName::R3),
                             {h1.ad_matrix(0), h1.ad_matrix(1), h1.ad_matrix(2)});
  CHECK(validate_extension(ExtensionData(tangent_rep, ExtensionData::zero_alpha(tangent_rep))).ok());

  // alpha hitting a non-central h-vector is rejected
  Representation triv = zero_rep(catalog(CatalogName::R3), h1);
  TwoCochain alpha(3, 3);
  alpha.set_pair(0, 1, e(3, 0));  // e4 is not central in h1
  auto report = validate_extension(ExtensionData(triv, alpha));
  CHECK_FALSE(report.ok());
  CHECK(report.summary().find("center") != std::string::npos);
}

TEST_CASE("build_extension trivial and nilpotent cases") {
  LieAlgebra r3 = catalog(CatalogName::R3);
  ExtendedAlgebra flat = build_extension(ExtensionData(zero_rep(r3, r3), TwoCochain(3, 3)));
  CHECK(flat.algebra().is_abelian());
  CHECK(flat.dim() == 6);

  // abelian k and h, pi = 0, alpha(e1,e2) = e4: two-step nilpotent
  TwoCochain alpha(3, 3);
  alpha.set_pair(0, 1, e(3, 0));
  ExtendedAlgebra g = build_extension(ExtensionData(zero_rep(r3, r3), alpha));
  CHECK_FALSE(g.algebra().is_abelian());
  CHECK(g.algebra().derived_in_center());
  CHECK(g.algebra().basis_bracket(0, 1) == e(6, 3));

  // solvable 6-dimensional semidirect product passes Jacobi by construction
  Representation rep(catalog(CatalogName::R3Lambda, Rational(0)), r3,
                     {typet1_iii(1, 0), Matrix::zero(3, 3), Matrix::zero(3, 3)});
  ExtendedAlgebra s = build_extension(ExtensionData(rep, ExtensionData::zero_alpha(rep)));
  CHECK(jacobi_defect(s.algebra().structure_constants()).empty());
  CHECK(s.algebra().basis_bracket(0, 3) == e(6, 3));  // t e4 = eta e4 with eta = 1
  CHECK(s.algebra().basis_bracket(0, 5) == e(6, 4));  // t e6 = e5 + nu e6 with nu = 0
}

TEST_CASE("invalid extension data is rejected with the validation report") {
  Representation triv = zero_rep(catalog(CatalogName::R3), catalog(CatalogName::H1));
  TwoCochain alpha(3, 3);
  alpha.set_pair(0, 1, e(3, 0));
  CHECK_THROWS_AS(build_extension(ExtensionData(triv, alpha)), ValidationError);
}

TEST_CASE("h range is an ideal; k range is a subalgebra iff alpha vanishes") {
  LieAlgebra r3 = catalog(CatalogName::R3);
  for (auto name : {CatalogName::H1, CatalogName::R3_3, CatalogName::SO3}) {
    ExtendedAlgebra t = tangent_algebra(catalog(name));
    CHECK(t.algebra().is_ideal(t.h_subspace()));
    CHECK(t.algebra().is_subalgebra(t.k_subspace()));
  }
  TwoCochain alpha(3, 3);
  alpha.set_pair(0, 1, e(3, 0));
  ExtendedAlgebra g = build_extension(ExtensionData(zero_rep(r3, r3), alpha));
  CHECK(g.algebra().is_ideal(g.h_subspace()));
  CHECK_FALSE(g.algebra().is_subalgebra(g.k_subspace()));
}

TEST_CASE("split_extension round trips a built extension") {
  Representation rep(catalog(CatalogName::H1), catalog(CatalogName::R3),
                     {typet1_iii(0, 0), typet1_iii(0, 0), Matrix::zero(3, 3)});
  TwoCochain alpha = ExtensionData::zero_alpha(rep);
  ExtendedAlgebra g = build_extension(ExtensionData(rep, alpha));

  ExtensionData rec = split_extension(g.algebra(), g.h_subspace(), g.k_subspace());
  CHECK(rec.k() == catalog(CatalogName::H1));
  CHECK(rec.h() == catalog(CatalogName::R3));
  for (std::size_t i = 0; i < 3; ++i) CHECK(rec.pi.matrix(i) == rep.matrix(i));
  CHECK(rec.alpha == alpha);

  // rebuilding reproduces g
  ExtendedAlgebra g2 = build_extension(rec);
  CHECK(g2.algebra() == g.algebra());
}

TEST_CASE("split_extension of a direct sum gives zero pi and alpha") {
  Representation rep = zero_rep(catalog(CatalogName::H1), catalog(CatalogName::R3));
  ExtendedAlgebra g = build_extension(ExtensionData(rep, TwoCochain(3, 3)));
  ExtensionData rec = split_extension(g.algebra(), g.h_subspace(), g.k_subspace());
  for (std::size_t i = 0; i < 3; ++i) CHECK(rec.pi.matrix(i).is_zero());
  CHECK(rec.alpha.is_zero());
}

TEST_CASE("split_extension rejects bad input") {
  ExtendedAlgebra g = tangent_algebra(catalog(CatalogName::H1));
  // k range is not an ideal of Th1
  CHECK_THROWS_AS(split_extension(g.algebra(), g.k_subspace(), g.h_subspace()), ValidationError);
  // not a complement
  CHECK_THROWS_AS(split_extension(g.algebra(), g.h_subspace(), g.h_subspace()), ValidationError);
}

TEST_CASE("tangent and cotangent algebras") {
  CHECK(tangent_algebra(catalog(CatalogName::R3)).algebra().is_abelian());
  CHECK(jacobi_defect(tangent_algebra(catalog(CatalogName::H1)).algebra().structure_constants()).empty());

  // coadjoint matrices are the negated transposes of the adjoint ones
  LieAlgebra h1 = catalog(CatalogName::H1);
  ExtendedAlgebra ct = cotangent_algebra(h1);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(ct.data().pi.matrix(i) == -h1.ad_matrix(i).transpose());
  // ad*(e1) sends e6* to -e5*
  CHECK(ct.algebra().bracket(e(6, 0), e(6, 5)) == -e(6, 4));
}

TEST_CASE("mutating one extension condition breaks Jacobi") {
  // valid: k = h1 acting on R3 by a type (iii) map through e1 only
  LieAlgebra h1 = catalog(CatalogName::H1);
  LieAlgebra r3 = catalog(CatalogName::R3);
  Matrix t = typet1_iii(1, 2);
  Representation good(h1, r3, {t, Matrix::zero(3, 3), Matrix::zero(3, 3)});
  ExtensionData data(good, ExtensionData::zero_alpha(good));
  CHECK(validate_extension(data).ok());
  CHECK(jacobi_defect(force_extension_algebra(data).structure_constants()).empty());

  // break the homomorphism property: pi(e3) nonzero although e3 = [e1,e2]
  Representation broken(h1, r3, {t, Matrix::zero(3, 3), t});
  ExtensionData bad(broken, ExtensionData::zero_alpha(broken));
  CHECK_FALSE(validate_extension(bad).ok());
  CHECK_FALSE(jacobi_defect(force_extension_algebra(bad).structure_constants()).empty());
}

TEST_CASE("product structure accessor splits by sign") {
  ExtendedAlgebra g = tangent_algebra(catalog(CatalogName::H1));
  Matrix e = g.product_structure();
  CHECK(e * e == Matrix::identity(6));
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(e(i, i) == Rational(1));
    CHECK(e(3 + i, 3 + i) == Rational(-1));
  }
}
