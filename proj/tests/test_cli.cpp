#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "liext/cli.hpp"

using namespace liext;

namespace {

struct CliResult {
  int exit_code;
  std::string out, err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& stdin_data = "") {
  std::istringstream in(stdin_data);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("catalog subcommand prints the requested algebra") {
  CliResult r = run_cli({"catalog", "--name", "r3_lambda", "--lambda", "1/2"});
  REQUIRE(r.exit_code == cli::kOk);
  json j = json::parse(r.out);
  LieAlgebra g = lie_algebra_from_json(j);
  CHECK(g.bracket(Vector::unit(3, 0), Vector::unit(3, 2)) == Rational(1, 2) * Vector::unit(3, 2));

  CHECK(run_cli({"catalog", "--name", "nope"}).exit_code == cli::kUsageError);
  CHECK(run_cli({"catalog"}).exit_code == cli::kUsageError);
}

TEST_CASE("solve subcommand produces a witness bundle") {
  CliResult r = run_cli({"solve", "--k", "h1", "--h", "R3", "--type", "iii",
                         "--eta", "0", "--nu", "0", "--eps1", "1"});
  REQUIRE(r.exit_code == cli::kOk);
  json j = json::parse(r.out);
  CHECK(j.at("verified") == true);
  CHECK_FALSE(j.at("witness").is_null());
  CHECK(j.at("kernel_dim") == 6);

  // stdin JSON mode
  CliResult r2 = run_cli({"solve", "--stdin"},
                         R"({"k":"h1","h":"R3","type":"iii","eta":"0","nu":"0","eps1":"1"})");
  REQUIRE(r2.exit_code == cli::kOk);
  CHECK(json::parse(r2.out).at("verified") == true);

  // malformed input names the problem and exits 2
  CliResult bad = run_cli({"solve", "--stdin"}, R"({"k":"so3","h":"R3","type":"i"})");
  CHECK(bad.exit_code == cli::kUsageError);
  CHECK(bad.err.find("k family") != std::string::npos);

  CliResult bad2 = run_cli({"solve", "--k", "h1", "--h", "R3", "--type", "iii", "--eta", "x"});
  CHECK(bad2.exit_code == cli::kUsageError);
}

TEST_CASE("verify subcommand passes a solver bundle and fails a corrupted J") {
  // build a bundle through the stdin JSON mode
  CaseParams p;
  p.eps1 = 1;
  CaseSpec spec(KFamily::H1, HTarget::R3, RepType::III, p);
  SolveResult res = solve_case(spec);
  REQUIRE(res.witness.has_value());
  Representation rho = build_rep(spec);
  ExtendedAlgebra ext = semidirect(rho);
  AlmostComplexStructure j = J_from_cocycle(ext, *res.witness);

  json bundle{{"g", to_json(ext)}, {"J", to_json(j.matrix())}};
  CliResult ok = run_cli({"verify", "--stdin"}, bundle.dump());
  CHECK(ok.exit_code == cli::kOk);
  CHECK(ok.out.find("[pass] Nijenhuis") != std::string::npos);
  CHECK(ok.out.find("totally_real") != std::string::npos);

  // corrupt one entry: J^2 = -1 fails first
  json corrupted = bundle;
  corrupted["J"][0][0] = "1";
  CliResult bad = run_cli({"verify", "--stdin"}, corrupted.dump());
  CHECK(bad.exit_code == cli::kVerificationFailure);
  CHECK(bad.out.find("[FAIL] J^2 = -1") != std::string::npos);

  // anti-Hermitian pair metric passes the compatibility check
  OneCochain jc(j.matrix().block(3, 0, 3, 3));
  Metric pair = metric_pair(Matrix::identity(3), jc);
  json with_metric = bundle;
  with_metric["metric"] = to_json(pair.gram());
  CliResult metric_run = run_cli({"verify", "--stdin"}, with_metric.dump());
  CHECK(metric_run.exit_code == cli::kOk);
  CHECK(metric_run.out.find("anti-Hermitian") != std::string::npos);
}

TEST_CASE("cocycles subcommand reports the linear system data") {
  CliResult r = run_cli({"cocycles", "--k", "h1", "--h", "R3", "--type", "iii",
                         "--eta", "0", "--nu", "0", "--eps1", "1"});
  REQUIRE(r.exit_code == cli::kOk);
  json j = json::parse(r.out);
  CHECK(j.at("z1_basis").size() == 6);
  CHECK(j.at("h1_dim").get<int>() >= 0);
  Matrix sys = matrix_from_json(j.at("system"));
  CHECK(rank(sys) == 3);
}

TEST_CASE("metrics subcommand classifies the four constructions") {
  CaseParams p;
  CaseSpec spec(KFamily::H1, HTarget::R3, RepType::III, p);
  SolveResult res = solve_case(spec);
  REQUIRE(res.witness.has_value());
  ExtendedAlgebra ext = semidirect(build_rep(spec));
  AlmostComplexStructure j = J_from_cocycle(ext, *res.witness);
  json bundle{{"g", to_json(ext)}, {"J", to_json(j.matrix())}};
  CliResult r = run_cli({"metrics", "--stdin"}, bundle.dump());
  REQUIRE(r.exit_code == cli::kOk);
  CHECK(r.out.find("metric_sum: Hermitian") != std::string::npos);
  CHECK(r.out.find("metric_pair: anti-Hermitian") != std::string::npos);
  CHECK(r.out.find("signature (3,3)") != std::string::npos);
  CHECK(r.out.find("totally_isotropic") != std::string::npos);
}

TEST_CASE("gcs subcommand checks the symplectic-type construction") {
  json k = to_json(LieAlgebra(StructureConstants{2, {}}));
  json jm = to_json(Matrix{{0, 1}, {-1, 0}});
  CliResult r = run_cli({"gcs", "--stdin"}, json{{"k", k}, {"j", jm}}.dump());
  REQUIRE(r.exit_code == cli::kOk);
  CHECK(r.out.find("[pass] Hermitian") != std::string::npos);
  CHECK(r.out.find("type: symplectic") != std::string::npos);

  // non-skew cocycle is rejected unless explicitly allowed
  json bad = to_json(Matrix{{1, 0}, {0, 2}});
  CliResult rejected = run_cli({"gcs", "--stdin"}, json{{"k", k}, {"j", bad}}.dump());
  CHECK(rejected.exit_code != cli::kOk);
  CliResult allowed = run_cli({"gcs", "--allow-non-hermitian", "--stdin"},
                              json{{"k", k}, {"j", bad}}.dump());
  CHECK(allowed.exit_code == cli::kVerificationFailure);  // builds, but not Hermitian
  CHECK(allowed.out.find("[FAIL] Hermitian") != std::string::npos);
}

TEST_CASE("cli usage errors exit with code two") {
  CHECK(run_cli({}).exit_code == cli::kUsageError);
  CHECK(run_cli({"unknown"}).exit_code == cli::kUsageError);
  CHECK(run_cli({"table", "3"}).exit_code == cli::kUsageError);
  CHECK(run_cli({"table", "1", "--grid", "huge"}).exit_code == cli::kUsageError);
}

TEST_CASE("solve output is deterministic for a fixed seed") {
  std::vector<std::string> args{"solve", "--k", "r3", "--h", "R3", "--type", "iv", "--eta", "1"};
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  CHECK(a.out == b.out);
}
