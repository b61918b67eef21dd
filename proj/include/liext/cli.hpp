#ifndef LIEXT_CLI_HPP
#define LIEXT_CLI_HPP

#include <CLI11.hpp>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "liext/serialization.hpp"
#include "liext/tables.hpp"

namespace liext::cli {

#ifndef LIEXT_DATA_DIR
#define LIEXT_DATA_DIR "data"
#endif

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailure = 1;
inline constexpr int kUsageError = 2;

namespace detail {

inline json read_json(const std::string& path, std::istream& in, bool use_stdin) {
  try {
    if (use_stdin || path == "-") return json::parse(in);
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open file " + path);
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON in " + (use_stdin ? std::string("stdin") : path) + ": " + e.what());
  }
}

inline void emit(const json& j, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw ParseError("cannot open output file " + out_path);
  f << j.dump(2) << "\n";
}

struct VerifyBundle {
  LieAlgebra g;
  AlmostComplexStructure j;
  std::optional<Subspace> k_range, h_range;

  static VerifyBundle load(const json& gj, const json& jj) {
    json algebra = gj.contains("algebra") ? gj.at("algebra") : gj;
    LieAlgebra g = lie_algebra_from_json(algebra);
    json jm = jj.contains("J") ? jj.at("J") : jj;
    AlmostComplexStructure j(matrix_from_json(jm));
    std::optional<Subspace> kr, hr;
    auto range_subspace = [&g](const json& r) {
      std::size_t lo = r.at(0).get<std::size_t>(), hi = r.at(1).get<std::size_t>();
      std::vector<Vector> cols;
      for (std::size_t i = lo; i <= hi; ++i) cols.push_back(Vector::unit(g.dim(), i - 1));
      return Subspace::span(cols, g.dim());
    };
    if (gj.contains("k_range")) kr = range_subspace(gj.at("k_range"));
    if (gj.contains("h_range")) hr = range_subspace(gj.at("h_range"));
    return {std::move(g), std::move(j), std::move(kr), std::move(hr)};
  }
};

}  // namespace detail

/// CLI entry point, exposed at library level so every path stays testable.
/// Exit codes: 0 success / expected match, 1 verification mismatch, 2 usage.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"exact-arithmetic kernel for extensions of Lie algebras with invariant structures"};
  app.require_subcommand(1);
  // --h is a real option on several subcommands, so help only answers to --help
  app.set_help_flag("--help", "print help");
  app.option_defaults()->ignore_case(false);

  // ---- catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "print a catalog algebra as JSON");
  catalog_cmd->set_help_flag("--help", "print help");
  std::string cat_name, cat_lambda, cat_delta, cat_out;
  catalog_cmd->add_option("--name", cat_name, "R3, h1, r3, r3_lambda, r3_delta, so3, sl2")->required();
  catalog_cmd->add_option("--lambda", cat_lambda, "parameter for r3_lambda");
  catalog_cmd->add_option("--delta", cat_delta, "parameter for r3_delta");
  catalog_cmd->add_option("--out", cat_out, "output file (default stdout)");

  // ---- solve
  auto* solve_cmd = app.add_subcommand("solve", "solve one case and print the result as JSON");
  solve_cmd->set_help_flag("--help", "print help");
  std::string s_k, s_h, s_type;
  std::string s_eta = "0", s_nu = "0", s_mu = "0", s_eps1 = "0", s_eps2 = "0", s_lambda = "0",
              s_delta = "0", s_out;
  bool s_stdin = false;
  unsigned s_seed = 20240915;
  solve_cmd->add_option("--k", s_k, "k family: h1, r3, r3_lambda, r3_delta");
  solve_cmd->add_option("--h", s_h, "target: R3 or h1");
  solve_cmd->add_option("--type", s_type, "representation type: i, ii, iii, iv");
  solve_cmd->add_option("--eta", s_eta, "parameter eta (rational p/q)");
  solve_cmd->add_option("--nu", s_nu, "parameter nu");
  solve_cmd->add_option("--mu", s_mu, "parameter mu");
  solve_cmd->add_option("--eps1", s_eps1, "coefficient of pi(e2)");
  solve_cmd->add_option("--eps2", s_eps2, "coefficient of pi(e3)");
  solve_cmd->add_option("--lambda", s_lambda, "family parameter lambda");
  solve_cmd->add_option("--delta", s_delta, "family parameter delta");
  solve_cmd->add_option("--seed", s_seed, "seed for the oversized-kernel sampling");
  solve_cmd->add_option("--out", s_out, "output file (default stdout)");
  solve_cmd->add_flag("--stdin", s_stdin, "read the case as JSON from stdin");

  // ---- verify
  auto* verify_cmd = app.add_subcommand("verify", "verify an algebra/J bundle, with optional metric or omega");
  verify_cmd->set_help_flag("--help", "print help");
  std::string v_g, v_j, v_metric, v_omega;
  bool v_stdin = false;
  verify_cmd->add_option("g", v_g, "algebra JSON file (plain or with ranges)");
  verify_cmd->add_option("J", v_j, "complex structure JSON file");
  verify_cmd->add_option("--metric", v_metric, "gram matrix JSON file: check Hermitian classes");
  verify_cmd->add_option("--omega", v_omega, "gram matrix JSON file: check symplectic compatibility");
  verify_cmd->add_flag("--stdin", v_stdin, "read one bundle object from stdin");

  // ---- table
  auto* table_cmd = app.add_subcommand("table", "reproduce an existence table and compare with the shipped verdicts");
  table_cmd->set_help_flag("--help", "print help");
  int t_table = 1;
  std::string t_grid = "default", t_out, t_expected;
  unsigned t_seed = 20240915;
  unsigned t_jobs = 1;
  table_cmd->add_option("table", t_table, "1 or 2")->required();
  table_cmd->add_option("--grid", t_grid, "parameter grid (only 'default' is defined)");
  table_cmd->add_option("--out", t_out, "CSV output file");
  table_cmd->add_option("--expected", t_expected, "expected verdict file (defaults to the shipped data)");
  table_cmd->add_option("--seed", t_seed, "seed for the oversized-kernel sampling");
  table_cmd->add_option("--jobs", t_jobs, "parallel row evaluation");

  // ---- cocycles
  auto* coc_cmd = app.add_subcommand("cocycles", "print the cocycle system, Z1/B1 bases and H1 dimension of a case");
  coc_cmd->set_help_flag("--help", "print help");
  std::string c_k, c_h, c_type;
  std::string c_eta = "0", c_nu = "0", c_mu = "0", c_eps1 = "0", c_eps2 = "0", c_lambda = "0",
              c_delta = "0", c_out;
  coc_cmd->add_option("--k", c_k)->required();
  coc_cmd->add_option("--h", c_h)->required();
  coc_cmd->add_option("--type", c_type)->required();
  coc_cmd->add_option("--eta", c_eta);
  coc_cmd->add_option("--nu", c_nu);
  coc_cmd->add_option("--mu", c_mu);
  coc_cmd->add_option("--eps1", c_eps1);
  coc_cmd->add_option("--eps2", c_eps2);
  coc_cmd->add_option("--lambda", c_lambda);
  coc_cmd->add_option("--delta", c_delta);
  coc_cmd->add_option("--out", c_out);

  // ---- metrics
  auto* metrics_cmd = app.add_subcommand("metrics", "build and classify the totally-real metric constructions for a bundle");
  metrics_cmd->set_help_flag("--help", "print help");
  std::string m_g, m_j, m_b;
  bool m_stdin = false;
  metrics_cmd->add_option("g", m_g, "extended algebra JSON (with ranges)");
  metrics_cmd->add_option("J", m_j, "block complex structure JSON");
  metrics_cmd->add_option("--B", m_b, "inner product on k as a gram JSON (default identity)");
  metrics_cmd->add_flag("--stdin", m_stdin, "read one bundle object from stdin");

  // ---- gcs
  auto* gcs_cmd = app.add_subcommand("gcs", "generalized complex structure checks on the cotangent algebra");
  gcs_cmd->set_help_flag("--help", "print help");
  std::string g_k, g_j;
  bool g_stdin = false, g_raw = false;
  gcs_cmd->add_option("k", g_k, "Lie algebra JSON file");
  gcs_cmd->add_option("j", g_j, "coadjoint 1-cocycle matrix JSON file");
  gcs_cmd->add_flag("--stdin", g_stdin, "read {\"k\":..., \"j\":...} from stdin");
  gcs_cmd->add_flag("--allow-non-hermitian", g_raw, "build J even when j is not skew-symmetric");

  try {
    std::vector<const char*> argv;
    argv.push_back("liext");
    for (const auto& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (catalog_cmd->parsed()) {
      CatalogName name;
      std::optional<Rational> param;
      if (cat_name == "R3") name = CatalogName::R3;
      else if (cat_name == "h1") name = CatalogName::H1;
      else if (cat_name == "r3") name = CatalogName::R3_3;
      else if (cat_name == "r3_lambda") { name = CatalogName::R3Lambda; param = Rational::parse(cat_lambda.empty() ? "0" : cat_lambda); }
      else if (cat_name == "r3_delta") { name = CatalogName::R3Delta; param = Rational::parse(cat_delta.empty() ? "0" : cat_delta); }
      else if (cat_name == "so3") name = CatalogName::SO3;
      else if (cat_name == "sl2") name = CatalogName::SL2;
      else throw ParseError("unknown catalog name '" + cat_name + "'");
      detail::emit(to_json(catalog(name, param)), cat_out, out);
      return kOk;
    }

    if (solve_cmd->parsed()) {
      std::optional<CaseSpec> spec;
      if (s_stdin) {
        spec = case_spec_from_json(detail::read_json("", in, true));
      } else {
        if (s_k.empty() || s_h.empty() || s_type.empty())
          throw ParseError("solve: --k, --h and --type are required (or use --stdin)");
        CaseParams p;
        p.eta = Rational::parse(s_eta);
        p.nu = Rational::parse(s_nu);
        p.mu = Rational::parse(s_mu);
        p.eps1 = Rational::parse(s_eps1);
        p.eps2 = Rational::parse(s_eps2);
        p.lambda = Rational::parse(s_lambda);
        p.delta = Rational::parse(s_delta);
        spec = CaseSpec(k_family_from_string(s_k), h_target_from_string(s_h),
                        rep_type_from_string(s_type), p);
      }
      SolveResult result = solve_case(*spec, s_seed);
      detail::emit(to_json(result, *spec), s_out, out);
      return kOk;
    }

    if (verify_cmd->parsed()) {
      json gj, jj, metric_j, omega_j;
      bool has_metric = false, has_omega = false;
      if (v_stdin) {
        json bundle = detail::read_json("", in, true);
        gj = bundle.at("g");
        jj = bundle.at("J");
        if ((has_metric = bundle.contains("metric"))) metric_j = bundle.at("metric");
        if ((has_omega = bundle.contains("omega"))) omega_j = bundle.at("omega");
      } else {
        if (v_g.empty() || v_j.empty()) throw ParseError("verify: g and J files are required (or --stdin)");
        gj = detail::read_json(v_g, in, false);
        jj = detail::read_json(v_j, in, false);
        if ((has_metric = !v_metric.empty())) metric_j = detail::read_json(v_metric, in, false);
        if ((has_omega = !v_omega.empty())) omega_j = detail::read_json(v_omega, in, false);
      }

      // J^2 = -1 is checked before anything else so a corrupted J fails first
      json jm = jj.contains("J") ? jj.at("J") : jj;
      Matrix raw = matrix_from_json(jm);
      bool squares = raw.is_square() && (raw * raw == -Matrix::identity(raw.rows()));
      out << (squares ? "[pass]" : "[FAIL]") << " J^2 = -1\n";
      if (!squares) return kVerificationFailure;

      detail::VerifyBundle bundle = detail::VerifyBundle::load(gj, jj);
      bool ok = true;
      bool integrable = is_integrable(bundle.g, bundle.j);
      ok &= integrable;
      out << (integrable ? "[pass]" : "[FAIL]") << " Nijenhuis tensor vanishes\n";
      if (bundle.k_range) {
        auto type = subspace_type(bundle.j, *bundle.k_range);
        out << "[info] k range is " << to_string(type) << "\n";
      }
      if (bundle.h_range) {
        auto type = subspace_type(bundle.j, *bundle.h_range);
        out << "[info] h range is " << to_string(type) << "\n";
      }
      if (has_metric) {
        Metric m(matrix_from_json(metric_j));
        bool herm = is_hermitian(m, bundle.j);
        bool anti = is_anti_hermitian(m, bundle.j);
        ok &= (herm || anti);
        out << ((herm || anti) ? "[pass]" : "[FAIL]") << " metric compatibility: "
            << (herm ? "Hermitian" : anti ? "anti-Hermitian" : "neither") << "\n";
      }
      if (has_omega) {
        SymplecticForm w(matrix_from_json(omega_j), bundle.g);
        Matrix conj = bundle.j.matrix().transpose() * w.gram() * bundle.j.matrix();
        bool inv = conj == w.gram(), anti = conj == -w.gram();
        out << (w.closed() ? "[pass]" : "[FAIL]") << " omega closed\n";
        out << ((inv || anti) ? "[pass]" : "[FAIL]") << " omega compatibility: "
            << (inv ? "invariant" : anti ? "anti-invariant" : "neither") << "\n";
        ok &= w.closed() && (inv || anti);
      }
      return ok ? kOk : kVerificationFailure;
    }

    if (table_cmd->parsed()) {
      if (t_table != 1 && t_table != 2) throw ParseError("table: expected 1 or 2");
      if (t_grid != "default") throw ParseError("table: only the default grid is defined");
      TableReport report;
      report.table = t_table;
      const auto& rows = table_rows(t_table);
      report.rows.resize(rows.size());
      HTarget target = t_table == 1 ? HTarget::R3 : HTarget::H1;
      unsigned jobs = std::max(1u, t_jobs);
      std::atomic<std::size_t> next{0};
      auto worker = [&] {
        while (true) {
          std::size_t i = next.fetch_add(1);
          if (i >= rows.size()) return;
          report.rows[i] = rows[i].yes ? evaluate_yes_row(rows[i], target, t_seed)
                                       : evaluate_no_row(rows[i], target, t_seed);
        }
      };
      if (jobs <= 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
      }
      std::string csv = table_report_csv(report);
      if (!t_out.empty()) {
        std::ofstream f(t_out);
        if (!f) throw ParseError("cannot open output file " + t_out);
        f << csv;
      }
      out << csv;
      std::string expected_path = t_expected.empty()
                                      ? std::string(LIEXT_DATA_DIR) + "/table" + std::to_string(t_table) + "_expected.csv"
                                      : t_expected;
      std::string diag;
      if (!check_against_expected_file(report, expected_path, &diag)) {
        err << "table " << t_table << " mismatch: " << diag << "\n";
        return kVerificationFailure;
      }
      out << "table " << t_table << ": all rows match the shipped verdicts\n";
      return kOk;
    }

    if (coc_cmd->parsed()) {
      CaseParams p;
      p.eta = Rational::parse(c_eta);
      p.nu = Rational::parse(c_nu);
      p.mu = Rational::parse(c_mu);
      p.eps1 = Rational::parse(c_eps1);
      p.eps2 = Rational::parse(c_eps2);
      p.lambda = Rational::parse(c_lambda);
      p.delta = Rational::parse(c_delta);
      CaseSpec spec(k_family_from_string(c_k), h_target_from_string(c_h),
                    rep_type_from_string(c_type), p);
      Representation rho = build_rep(spec);
      json z1 = json::array();
      for (const auto& theta : z1_basis(rho)) z1.push_back(to_json(theta));
      json b1 = json::array();
      for (const auto& theta : b1_basis(rho)) b1.push_back(to_json(theta));
      json result{{"case", to_json(spec)},
                  {"system", to_json(assemble_cocycle_system(spec))},
                  {"z1_basis", std::move(z1)},
                  {"b1_basis", std::move(b1)},
                  {"h1_dim", h1_dim(rho)}};
      detail::emit(result, c_out, out);
      return kOk;
    }

    if (metrics_cmd->parsed()) {
      json gj, jj;
      Matrix b;
      if (m_stdin) {
        json bundle = detail::read_json("", in, true);
        gj = bundle.at("g");
        jj = bundle.at("J");
        b = bundle.contains("B") ? matrix_from_json(bundle.at("B")) : Matrix::identity(3);
      } else {
        if (m_g.empty() || m_j.empty()) throw ParseError("metrics: g and J files are required (or --stdin)");
        gj = detail::read_json(m_g, in, false);
        jj = detail::read_json(m_j, in, false);
        b = m_b.empty() ? Matrix::identity(3) : matrix_from_json(detail::read_json(m_b, in, false));
      }
      detail::VerifyBundle bundle = detail::VerifyBundle::load(gj, jj);
      if (!bundle.k_range || !bundle.h_range)
        throw ParseError("metrics: field 'g' must carry k_range and h_range");
      std::size_t kd = bundle.k_range->dim();
      if (b.rows() != kd) throw ParseError("metrics: field 'B' has the wrong size for k");
      OneCochain jc(bundle.j.matrix().block(kd, 0, bundle.h_range->dim(), kd));
      auto classify = [&](const char* name, const Metric& m) {
        auto sig = signature(m);
        out << name << ": " << (is_hermitian(m, bundle.j) ? "Hermitian" : is_anti_hermitian(m, bundle.j) ? "anti-Hermitian" : "incompatible")
            << ", signature (" << sig.first << "," << sig.second << ")"
            << ", k " << to_string(subspace_metric_type(m, *bundle.k_range))
            << ", h " << to_string(subspace_metric_type(m, *bundle.h_range)) << "\n";
      };
      classify("metric_sum", metric_sum(b, jc));
      classify("metric_pair", metric_pair(b, jc));
      classify("hermitian_from_B", hermitian_from_B(b, jc));
      classify("anti_hermitian_from_B", anti_hermitian_from_B(b, jc));
      return kOk;
    }

    if (gcs_cmd->parsed()) {
      json kj, jj;
      if (g_stdin) {
        json bundle = detail::read_json("", in, true);
        kj = bundle.at("k");
        jj = bundle.at("j");
      } else {
        if (g_k.empty() || g_j.empty()) throw ParseError("gcs: k and j files are required (or --stdin)");
        kj = detail::read_json(g_k, in, false);
        jj = detail::read_json(g_j, in, false);
      }
      LieAlgebra k = lie_algebra_from_json(kj);
      OneCochain jc(matrix_from_json(jj));
      AlmostComplexStructure j = gcs_from_cocycle(k, jc, !g_raw);
      GcsReport report = gcs_check(k, j);
      out << (report.hermitian ? "[pass]" : "[FAIL]") << " Hermitian for the hyperbolic metric\n";
      out << (report.integrable ? "[pass]" : "[FAIL]") << " integrable on T*k\n";
      out << "[info] type: "
          << (report.type.symplectic_type ? "symplectic" : report.type.complex_type ? "complex" : "mixed");
      if (report.type.type_k) out << " (type k = " << *report.type.type_k << ")";
      out << "\n";
      return report.ok() ? kOk : kVerificationFailure;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kVerificationFailure;
  }
  err << "usage error: no subcommand\n";
  return kUsageError;
}

}  // namespace liext::cli

#endif
