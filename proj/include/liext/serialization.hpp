#ifndef LIEXT_SERIALIZATION_HPP
#define LIEXT_SERIALIZATION_HPP

#include <json.hpp>
#include <optional>
#include <string>

#include "liext/solver.hpp"

namespace liext {

using nlohmann::json;

// Rationals travel as "p/q" strings ("p" when q = 1); matrices as row-major
// arrays of such strings; bracket lists and cochain pairs use 1-based indices.

inline json to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("rational: expected \"p/q\" string, got " + j.dump());
}

inline json to_json(const Vector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(v[i].str());
  return out;
}

inline Vector vector_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("vector: expected array, got " + j.dump());
  Vector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i]);
  return v;
}

inline json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

inline Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ParseError("matrix: expected array of rows, got " + j.dump());
  Matrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols()) throw ParseError("matrix: ragged rows");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rational_from_json(j[r][c]);
  }
  return m;
}

inline json to_json(const LieAlgebra& g) {
  json brackets = json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t jj = i + 1; jj < g.dim(); ++jj) {
      Vector b = g.basis_bracket(i, jj);
      for (std::size_t k = 0; k < g.dim(); ++k)
        if (!b[k].is_zero()) brackets.push_back({i + 1, jj + 1, k + 1, b[k].str()});
    }
  return json{{"dim", g.dim()}, {"brackets", std::move(brackets)}};
}

inline LieAlgebra lie_algebra_from_json(const json& j) {
  if (!j.contains("dim")) throw ParseError("algebra: missing field 'dim'");
  StructureConstants sc;
  sc.dim = j.at("dim").get<std::size_t>();
  for (const auto& term : j.value("brackets", json::array())) {
    if (!term.is_array() || term.size() != 4) throw ParseError("algebra: bracket terms are [i,j,k,\"c\"]");
    std::size_t a = term[0].get<std::size_t>(), b = term[1].get<std::size_t>(), k = term[2].get<std::size_t>();
    if (a < 1 || b < 1 || k < 1 || a > sc.dim || b > sc.dim || k > sc.dim || a >= b)
      throw ParseError("algebra: bracket indices must be 1-based with i < j");
    sc.terms.push_back({a - 1, b - 1, k - 1, rational_from_json(term[3])});
  }
  return LieAlgebra(std::move(sc));
}

inline json to_json(const OneCochain& theta) { return to_json(theta.m); }

inline json to_json(const TwoCochain& alpha) {
  json pairs = json::array();
  for (std::size_t i = 0; i < alpha.k_dim(); ++i)
    for (std::size_t jj = i + 1; jj < alpha.k_dim(); ++jj)
      if (!alpha.on_pair(i, jj).is_zero()) pairs.push_back({i + 1, jj + 1, to_json(alpha.on_pair(i, jj))});
  return json{{"k_dim", alpha.k_dim()}, {"h_dim", alpha.h_dim()}, {"pairs", std::move(pairs)}};
}

inline TwoCochain two_cochain_from_json(const json& j) {
  TwoCochain alpha(j.at("k_dim").get<std::size_t>(), j.at("h_dim").get<std::size_t>());
  for (const auto& p : j.value("pairs", json::array())) {
    if (!p.is_array() || p.size() != 3) throw ParseError("two-cochain: pairs are [i,j,[values]]");
    alpha.set_pair(p[0].get<std::size_t>() - 1, p[1].get<std::size_t>() - 1, vector_from_json(p[2]));
  }
  return alpha;
}

inline json to_json(const ExtensionData& data) {
  json pi = json::array();
  for (const auto& m : data.pi.matrices()) pi.push_back(to_json(m));
  return json{{"k", to_json(data.k())},
              {"h", to_json(data.h())},
              {"pi", std::move(pi)},
              {"alpha", to_json(data.alpha)}};
}

inline ExtensionData extension_data_from_json(const json& j) {
  LieAlgebra k = lie_algebra_from_json(j.at("k"));
  LieAlgebra h = lie_algebra_from_json(j.at("h"));
  std::vector<Matrix> mats;
  for (const auto& m : j.at("pi")) mats.push_back(matrix_from_json(m));
  Representation rep(std::move(k), std::move(h), std::move(mats));
  TwoCochain alpha = j.contains("alpha") ? two_cochain_from_json(j.at("alpha"))
                                         : ExtensionData::zero_alpha(rep);
  return ExtensionData(std::move(rep), std::move(alpha));
}

inline json to_json(const ExtendedAlgebra& ext) {
  return json{{"algebra", to_json(ext.algebra())},
              {"k_range", {1, ext.k_dim()}},
              {"h_range", {ext.k_dim() + 1, ext.dim()}}};
}

inline json acs_to_json(const AlmostComplexStructure& j, const LieAlgebra& ambient) {
  return json{{"J", to_json(j.matrix())}, {"algebra", to_json(ambient)}};
}

inline json to_json(const CaseSpec& spec) {
  json out{{"k", to_string(spec.k_family)},
           {"h", to_string(spec.h_target)},
           {"type", to_string(spec.rep_type)},
           {"eta", spec.params.eta.str()},
           {"nu", spec.params.nu.str()},
           {"mu", spec.params.mu.str()},
           {"eps1", spec.params.eps1.str()},
           {"eps2", spec.params.eps2.str()}};
  if (spec.k_family == KFamily::R3Lambda) out["lambda"] = spec.params.lambda.str();
  if (spec.k_family == KFamily::R3Delta) out["delta"] = spec.params.delta.str();
  return out;
}

inline KFamily k_family_from_string(const std::string& s) {
  if (s == "h1") return KFamily::H1;
  if (s == "r3") return KFamily::R3;
  if (s == "r3_lambda") return KFamily::R3Lambda;
  if (s == "r3_delta") return KFamily::R3Delta;
  throw ParseError("unknown k family '" + s + "' (expected h1, r3, r3_lambda, r3_delta)");
}

inline HTarget h_target_from_string(const std::string& s) {
  if (s == "R3" || s == "r3") return HTarget::R3;
  if (s == "h1" || s == "H1") return HTarget::H1;
  throw ParseError("unknown h target '" + s + "' (expected R3 or h1)");
}

inline RepType rep_type_from_string(const std::string& s) {
  if (s == "i") return RepType::I;
  if (s == "ii") return RepType::II;
  if (s == "iii") return RepType::III;
  if (s == "iv") return RepType::IV;
  throw ParseError("unknown representation type '" + s + "' (expected i, ii, iii, iv)");
}

inline CaseSpec case_spec_from_json(const json& j) {
  auto field = [&j](const char* name, const char* fallback = "0") {
    return j.contains(name) ? rational_from_json(j.at(name)) : Rational::parse(fallback);
  };
  CaseParams p;
  p.eta = field("eta");
  p.nu = field("nu");
  p.mu = field("mu");
  p.eps1 = field("eps1");
  p.eps2 = field("eps2");
  p.lambda = field("lambda");
  p.delta = field("delta");
  return CaseSpec(k_family_from_string(j.at("k").get<std::string>()),
                  h_target_from_string(j.at("h").get<std::string>()),
                  rep_type_from_string(j.at("type").get<std::string>()), p);
}

inline json to_json(const SolveResult& result, const CaseSpec& spec) {
  json kernel = json::array();
  for (const auto& v : result.kernel) kernel.push_back(to_json(v));
  json log = json::array();
  for (const auto& entry : result.search_log) {
    json coeffs = json::array();
    for (const auto& c : entry.coefficients) coeffs.push_back(c.str());
    log.push_back({{"c", std::move(coeffs)}, {"det", entry.det.str()}});
  }
  json out{{"case", to_json(spec)},
           {"system", to_json(result.system)},
           {"kernel", std::move(kernel)},
           {"kernel_dim", result.kernel_dim},
           {"verified", result.verified},
           {"no_witness_certified", result.no_witness_certified},
           {"combos_tried", result.combos_tried},
           {"search_log", std::move(log)}};
  out["witness"] = result.witness ? to_json(result.witness->m) : json(nullptr);
  return out;
}

}  // namespace liext

#endif
