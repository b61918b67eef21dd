#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "liext/serialization.hpp"

using namespace liext;

TEST_CASE("rational and matrix json forms") {
  CHECK(to_json(Rational(3, 2)) == json("3/2"));
  CHECK(to_json(Rational(-7)) == json("-7"));
  CHECK(rational_from_json(json("5/10")) == Rational(1, 2));
  CHECK(rational_from_json(json(4)) == Rational(4));
  CHECK_THROWS_AS(rational_from_json(json::object()), ParseError);

  Matrix m{{1, Rational(1, 2)}, {0, -2}};
  json jm = to_json(m);
  CHECK(jm == json::parse(R"([["1","1/2"],["0","-2"]])"));
  CHECK(matrix_from_json(jm) == m);
  CHECK_THROWS_AS(matrix_from_json(json::parse(R"([["1"],["2","3"]])")), ParseError);
}

TEST_CASE("algebra json round trip uses one-based sparse brackets") {
  LieAlgebra h1 = catalog(CatalogName::H1);
  json j = to_json(h1);
  CHECK(j.at("dim") == 3);
  CHECK(j.at("brackets") == json::parse(R"([[1,2,3,"1"]])"));
  CHECK(lie_algebra_from_json(j) == h1);

  for (auto name : {CatalogName::R3_3, CatalogName::SO3, CatalogName::SL2})
    CHECK(lie_algebra_from_json(to_json(catalog(name))) == catalog(name));
  LieAlgebra rl = catalog(CatalogName::R3Lambda, Rational(1, 2));
  CHECK(lie_algebra_from_json(to_json(rl)) == rl);

  CHECK_THROWS_AS(lie_algebra_from_json(json::parse(R"({"dim":3,"brackets":[[2,1,1,"1"]]})")), ParseError);
  // a non-Lie bracket table is rejected by construction
  CHECK_THROWS_AS(lie_algebra_from_json(json::parse(
                      R"({"dim":3,"brackets":[[1,2,3,"1"],[1,3,1,"1"],[2,3,2,"1"]]})")),
                  ValidationError);
}

TEST_CASE("two cochain and extension data round trips") {
  Representation rho(catalog(CatalogName::R3), catalog(CatalogName::H1),
                     {Matrix::zero(3, 3), Matrix::zero(3, 3), Matrix::zero(3, 3)});
  TwoCochain alpha(3, 3);
  alpha.set_pair(0, 1, Vector{0, 0, Rational(1, 3)});
  CHECK(two_cochain_from_json(to_json(alpha)) == alpha);

  ExtensionData data(rho, alpha);
  ExtensionData back = extension_data_from_json(to_json(data));
  CHECK(back.k() == data.k());
  CHECK(back.h() == data.h());
  CHECK(back.alpha == data.alpha);
  for (std::size_t i = 0; i < 3; ++i) CHECK(back.pi.matrix(i) == data.pi.matrix(i));
}

TEST_CASE("case spec json round trip") {
  CaseParams p;
  p.eta = Rational(1, 2);
  p.nu = -1;
  p.eps1 = 1;
  p.lambda = 0;
  CaseSpec spec(KFamily::R3Lambda, HTarget::R3, RepType::III, p);
  CaseSpec back = case_spec_from_json(to_json(spec));
  CHECK(back.k_family == spec.k_family);
  CHECK(back.h_target == spec.h_target);
  CHECK(back.rep_type == spec.rep_type);
  CHECK(back.params.eta == spec.params.eta);
  CHECK(back.params.eps2 == spec.params.eps2);

  CHECK_THROWS_AS(case_spec_from_json(json::parse(R"({"k":"so3","h":"R3","type":"i"})")), ParseError);
}

TEST_CASE("solve result json carries the full pipeline output") {
  CaseParams p;
  p.eps1 = 1;
  CaseSpec spec(KFamily::H1, HTarget::R3, RepType::III, p);
  SolveResult res = solve_case(spec);
  json j = to_json(res, spec);
  CHECK(j.at("kernel_dim") == res.kernel_dim);
  CHECK(j.at("verified") == res.verified);
  CHECK(j.at("kernel").size() == res.kernel.size());
  if (res.witness)
    CHECK(matrix_from_json(j.at("witness")) == res.witness->m);
  CHECK(matrix_from_json(j.at("system")) == res.system);
}

TEST_CASE("extended algebra serialization carries ranges") {
  ExtendedAlgebra ext = tangent_algebra(catalog(CatalogName::H1));
  json j = to_json(ext);
  CHECK(j.at("k_range") == json({1, 3}));
  CHECK(j.at("h_range") == json({4, 6}));
  CHECK(lie_algebra_from_json(j.at("algebra")) == ext.algebra());
}
