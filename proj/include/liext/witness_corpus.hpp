#ifndef LIEXT_WITNESS_CORPUS_HPP
#define LIEXT_WITNESS_CORPUS_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "liext/solver.hpp"

namespace liext {

using ParamMap = std::map<std::string, Rational>;
using EntryMap = std::map<std::string, Rational>;

/// One solution family: the case it belongs to, its parameter constraints
/// (encoded by `derive`), the shape of the cocycle matrix j with named free
/// entries, and the stated determinant formula. Families tagged complex_only
/// exist only at non-real parameter values and carry no template.
struct WitnessFamily {
  std::string id;
  int table = 1;
  KFamily k_family = KFamily::H1;
  RepType rep_type = RepType::I;
  std::string param_label;
  bool complex_only = false;

  std::vector<std::string> free_params;     // sampled over the default grid
  std::vector<std::string> nonzero_params;  // sampled over the nonzero grid
  std::vector<std::string> eps_params;      // sampled over {0, 1}
  std::vector<std::string> entries;         // all named template entries
  std::vector<std::string> sampled_entries; // entries that parameters depend on (kept nonzero)

  std::function<CaseParams(const ParamMap&, const EntryMap&)> derive;
  std::function<Matrix(const CaseParams&, const EntryMap&)> shape;
  std::function<Rational(const CaseParams&, const EntryMap&)> det;

  ParamMap default_params;
  EntryMap default_entries;

  HTarget h_target() const { return table == 1 ? HTarget::R3 : HTarget::H1; }

  CaseSpec spec(const ParamMap& p, const EntryMap& e) const {
    return CaseSpec(k_family, h_target(), rep_type, derive(p, e));
  }
};

namespace corpus_detail {

inline Rational pv(const ParamMap& m, const char* key) {
  auto it = m.find(key);
  if (it == m.end()) throw ValidationError(std::string("corpus: missing parameter ") + key);
  return it->second;
}
inline Rational jv(const EntryMap& m, const char* key) {
  auto it = m.find(key);
  return it == m.end() ? Rational(0) : it->second;
}

}  // namespace corpus_detail

/// Machine-readable transcription of every solution family listed in the
/// computational appendix, real and complex alike.
inline const std::vector<WitnessFamily>& known_solution_witnesses() {
  using corpus_detail::jv;
  using corpus_detail::pv;
  static const std::vector<WitnessFamily> families = [] {
    std::vector<WitnessFamily> fs;

    auto add = [&fs](WitnessFamily f) { fs.push_back(std::move(f)); };
    auto complex_family = [&fs](const char* id, int table, KFamily kf, RepType rt, const char* label) {
      WitnessFamily f;
      f.id = id;
      f.table = table;
      f.k_family = kf;
      f.rep_type = rt;
      f.param_label = label;
      f.complex_only = true;
      fs.push_back(std::move(f));
    };

    // ---------------------------------------------------------------- h = R3

    // CASE I: k = h1. Type (iii): the displayed matrices are the eps = 0
    // representatives; the eps-general kernel shape substitutes
    // j42 -> eps j41 (eta != 0 branch) and j62 -> j53 + eps j61.
    {
      WitnessFamily f;
      f.id = "T1.I.iii.1";
      f.table = 1;
      f.k_family = KFamily::H1;
      f.rep_type = RepType::III;
      f.param_label = "eta=0, nu=0, eps free";
      f.eps_params = {"eps"};
      f.entries = {"j41", "j42", "j51", "j52", "j53", "j61"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.eta = 0; c.nu = 0; c.eps1 = pv(p, "eps");
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), jv(e, "j42"), 0},
                      {jv(e, "j51"), jv(e, "j52"), jv(e, "j53")},
                      {jv(e, "j61"), jv(e, "j53") + c.eps1 * jv(e, "j61"), 0}};
      };
      f.det = [](const CaseParams& c, const EntryMap& e) {
        return -jv(e, "j41") * jv(e, "j53") * jv(e, "j53") -
               c.eps1 * jv(e, "j41") * jv(e, "j53") * jv(e, "j61") +
               jv(e, "j42") * jv(e, "j53") * jv(e, "j61");
      };
      f.default_params = {{"eps", 0}};
      f.default_entries = {{"j41", 1}, {"j53", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T1.I.iii.2";
      f.table = 1;
      f.k_family = KFamily::H1;
      f.rep_type = RepType::III;
      f.param_label = "eta free, nu=0, eps free";
      f.free_params = {"eta"};
      f.eps_params = {"eps"};
      f.entries = {"j41", "j51", "j52", "j53", "j61"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.eta = pv(p, "eta"); c.nu = 0; c.eps1 = pv(p, "eps");
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), c.eps1 * jv(e, "j41"), 0},
                      {jv(e, "j51"), jv(e, "j52"), jv(e, "j53")},
                      {jv(e, "j61"), jv(e, "j53") + c.eps1 * jv(e, "j61"), 0}};
      };
      f.det = [](const CaseParams&, const EntryMap& e) {
        return -jv(e, "j41") * jv(e, "j53") * jv(e, "j53");
      };
      f.default_params = {{"eta", 1}, {"eps", 0}};
      f.default_entries = {{"j41", 1}, {"j53", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T1.I.iv.1";
      f.table = 1;
      f.k_family = KFamily::H1;
      f.rep_type = RepType::IV;
      f.param_label = "eta=0, eps free";
      f.eps_params = {"eps"};
      f.entries = {"j41", "j42", "j43", "j51", "j61"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.eta = 0; c.eps1 = pv(p, "eps");
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), jv(e, "j42"), jv(e, "j43")},
                      {jv(e, "j51"), c.eps1 * jv(e, "j51") + jv(e, "j43"), 0},
                      {jv(e, "j61"), c.eps1 * jv(e, "j61"), 0}};
      };
      f.det = [](const CaseParams&, const EntryMap& e) {
        return -jv(e, "j43") * jv(e, "j43") * jv(e, "j61");
      };
      f.default_params = {{"eps", 0}};
      f.default_entries = {{"j43", 1}, {"j61", 1}};
      add(f);
    }

    // CASE II: k = r3 (eps forced to zero).
    {
      WitnessFamily f;
      f.id = "T1.II.iii.1";
      f.table = 1;
      f.k_family = KFamily::R3;
      f.rep_type = RepType::III;
      f.param_label = "eta=1, nu=1";
      f.entries = {"j41", "j43", "j51", "j52", "j53", "j61"};
      f.derive = [](const ParamMap&, const EntryMap&) {
        CaseParams c;
        c.eta = 1; c.nu = 1;
        return c;
      };
      f.shape = [](const CaseParams&, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), 0, jv(e, "j43")},
                      {jv(e, "j51"), jv(e, "j52"), jv(e, "j53")},
                      {jv(e, "j61"), 0, jv(e, "j52")}};
      };
      f.det = [](const CaseParams&, const EntryMap& e) {
        return jv(e, "j41") * jv(e, "j52") * jv(e, "j52") -
               jv(e, "j61") * jv(e, "j43") * jv(e, "j52");
      };
      f.default_entries = {{"j41", 1}, {"j52", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T1.II.iii.2";
      f.table = 1;
      f.k_family = KFamily::R3;
      f.rep_type = RepType::III;
      f.param_label = "eta free, nu=1";
      f.free_params = {"eta"};
      f.entries = {"j41", "j51", "j52", "j53", "j61"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.eta = pv(p, "eta"); c.nu = 1;
        return c;
      };
      f.shape = [](const CaseParams&, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), 0, 0},
                      {jv(e, "j51"), jv(e, "j52"), jv(e, "j53")},
                      {jv(e, "j61"), 0, jv(e, "j52")}};
      };
      f.det = [](const CaseParams&, const EntryMap& e) {
        return jv(e, "j41") * jv(e, "j52") * jv(e, "j52");
      };
      f.default_params = {{"eta", 1}};
      f.default_entries = {{"j41", 1}, {"j52", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T1.II.iv.1";
      f.table = 1;
      f.k_family = KFamily::R3;
      f.rep_type = RepType::IV;
      f.param_label = "eta=1";
      f.entries = {"j41", "j43", "j51", "j53", "j61"};
      f.derive = [](const ParamMap&, const EntryMap&) {
        CaseParams c;
        c.eta = 1;
        return c;
      };
      f.shape = [](const CaseParams&, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), jv(e, "j53"), jv(e, "j43")},
                      {jv(e, "j51"), 0, jv(e, "j53")},
                      {jv(e, "j61"), 0, 0}};
      };
      f.det = [](const CaseParams&, const EntryMap& e) {
        return jv(e, "j53") * jv(e, "j53") * jv(e, "j61");
      };
      f.default_entries = {{"j53", 1}, {"j61", 1}};
      add(f);
    }

    // CASE III: k = r3_lambda. A zero/nonzero pattern family is described by
    // its mask and determinant; this builder covers those.
    struct MaskSpec {
      const char* id;
      const char* label;
      // 9 chars row-major: '1' = free entry, '0' = zero
      const char* mask;
      std::function<Rational(const EntryMap&)> det;
      std::vector<std::pair<const char*, Rational>> defaults;
      // parameter bindings: fixed values plus names copied from free params
      std::function<CaseParams(const ParamMap&)> derive;
      std::vector<std::string> free_params, nonzero_params, eps_params;
    };
    auto entry_name = [](std::size_t r, std::size_t c) {
      return "j" + std::to_string(4 + r) + std::to_string(1 + c);
    };
    auto add_mask = [&](int table, KFamily kf, RepType rt, const MaskSpec& m) {
      WitnessFamily f;
      f.id = m.id;
      f.table = table;
      f.k_family = kf;
      f.rep_type = rt;
      f.param_label = m.label;
      f.free_params = m.free_params;
      f.nonzero_params = m.nonzero_params;
      f.eps_params = m.eps_params;
      for (std::size_t i = 0; i < 9; ++i)
        if (m.mask[i] == '1') f.entries.push_back(entry_name(i / 3, i % 3));
      std::string mask = m.mask;
      f.derive = [derive = m.derive](const ParamMap& p, const EntryMap&) { return derive(p); };
      f.shape = [mask, entry_name](const CaseParams&, const EntryMap& e) {
        Matrix j(3, 3);
        for (std::size_t i = 0; i < 9; ++i)
          if (mask[i] == '1') j(i / 3, i % 3) = jv(e, entry_name(i / 3, i % 3).c_str());
        return j;
      };
      f.det = [det = m.det](const CaseParams&, const EntryMap& e) { return det(e); };
      for (const auto& [k, v] : m.defaults) f.default_entries[k] = v;
      for (const auto& p : f.free_params) f.default_params.emplace(p, 1);
      for (const auto& p : f.nonzero_params) f.default_params.emplace(p, 1);
      for (const auto& p : f.eps_params) f.default_params.emplace(p, 0);
      fs.push_back(std::move(f));
    };
    auto D = [](const char* a, const char* b, const char* c) {
      return [a, b, c](const EntryMap& e) { return jv(e, a) * jv(e, b) * jv(e, c); };
    };
    auto Dneg = [](const char* a, const char* b, const char* c) {
      return [a, b, c](const EntryMap& e) { return -(jv(e, a) * jv(e, b) * jv(e, c)); };
    };
    auto D2 = [](const char* a1, const char* b1, const char* c1, int s1,
                 const char* a2, const char* b2, const char* c2, int s2) {
      return [=](const EntryMap& e) {
        Rational t1 = jv(e, a1) * jv(e, b1) * jv(e, c1);
        Rational t2 = jv(e, a2) * jv(e, b2) * jv(e, c2);
        return Rational(s1) * t1 + Rational(s2) * t2;
      };
    };
    auto fix = [](Rational eta, Rational nu, Rational mu, Rational lambda) {
      return [=](const ParamMap&) {
        CaseParams c;
        c.eta = eta; c.nu = nu; c.mu = mu; c.lambda = lambda;
        return c;
      };
    };

    // (i), lambda = 0, twelve families, eps = 0 throughout.
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.1", "lambda=0, eta=0, nu=0, mu=1, eps=0", "101101110",
              D2("j41", "j53", "j62", -1, "j43", "j51", "j62", +1),
              {{"j43", 1}, {"j51", 1}, {"j62", 1}}, fix(0, 0, 1, 0)});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.2", "lambda=0, eta=0, nu=1, mu=0, eps=0", "101110101",
              D2("j41", "j52", "j63", +1, "j43", "j52", "j61", -1),
              {{"j41", 1}, {"j52", 1}, {"j63", 1}}, fix(0, 1, 0, 0)});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.3", "lambda=0, eta=1, nu=0, mu=0, eps=0", "110101101",
              D2("j42", "j51", "j63", -1, "j42", "j53", "j61", +1),
              {{"j42", 1}, {"j53", 1}, {"j61", 1}}, fix(1, 0, 0, 0)});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.4", "lambda=0, eta free, nu=1, mu=0, eps=0", "100110101",
              D("j41", "j52", "j63"), {{"j41", 1}, {"j52", 1}, {"j63", 1}},
              [](const ParamMap& p) { CaseParams c; c.eta = pv(p, "eta"); c.nu = 1; c.mu = 0; c.lambda = 0; return c; },
              {"eta"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.5", "lambda=0, eta free, nu=0, mu=1, eps=0", "100101110",
              Dneg("j41", "j53", "j62"), {{"j41", 1}, {"j53", 1}, {"j62", 1}},
              [](const ParamMap& p) { CaseParams c; c.eta = pv(p, "eta"); c.nu = 0; c.mu = 1; c.lambda = 0; return c; },
              {"eta"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.6", "lambda=0, eta=1, nu free, mu=0, eps=0", "110100101",
              Dneg("j42", "j51", "j63"), {{"j42", 1}, {"j51", 1}, {"j63", 1}},
              [](const ParamMap& p) { CaseParams c; c.eta = 1; c.nu = pv(p, "nu"); c.mu = 0; c.lambda = 0; return c; },
              {"nu"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.7", "lambda=0, eta=1, nu=0, mu free, eps=0", "110101100",
              D("j42", "j53", "j61"), {{"j42", 1}, {"j53", 1}, {"j61", 1}},
              [](const ParamMap& p) { CaseParams c; c.eta = 1; c.nu = 0; c.mu = pv(p, "mu"); c.lambda = 0; return c; },
              {"mu"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.8", "lambda=0, eta=0, nu free, mu=1, eps=0", "101100110",
              D("j43", "j51", "j62"), {{"j43", 1}, {"j51", 1}, {"j62", 1}},
              [](const ParamMap& p) { CaseParams c; c.eta = 0; c.nu = pv(p, "nu"); c.mu = 1; c.lambda = 0; return c; },
              {"nu"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.9", "lambda=0, eta=0, nu=1, mu free, eps=0", "101110100",
              Dneg("j43", "j52", "j61"), {{"j43", 1}, {"j52", 1}, {"j61", 1}},
              [](const ParamMap& p) { CaseParams c; c.eta = 0; c.nu = 1; c.mu = pv(p, "mu"); c.lambda = 0; return c; },
              {"mu"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.10", "lambda=0, eta=1, nu=0, mu=1, eps=0", "110101110",
              D2("j41", "j53", "j62", -1, "j42", "j53", "j61", +1),
              {{"j42", 1}, {"j53", 1}, {"j61", 1}}, fix(1, 0, 1, 0)});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.11", "lambda=0, eta=1, nu=1, mu=0, eps=0", "110110101",
              D2("j41", "j52", "j63", +1, "j42", "j51", "j63", -1),
              {{"j41", 1}, {"j52", 1}, {"j63", 1}}, fix(1, 1, 0, 0)});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.12", "lambda=0, eta=0, nu=1, mu=1, eps=0", "101110110",
              D2("j43", "j51", "j62", +1, "j43", "j52", "j61", -1),
              {{"j43", 1}, {"j51", 1}, {"j62", 1}}, fix(0, 1, 1, 0)});

    // (i), lambda != 0, sixteen families.
    auto lam = [](const ParamMap& p) { return pv(p, "lambda"); };
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.13", "lambda!=0, eta=1, mu=lambda, nu free", "110100101",
              Dneg("j42", "j51", "j63"), {{"j42", 1}, {"j51", 1}, {"j63", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = 1; c.nu = pv(p, "nu"); c.mu = c.lambda; return c; },
              {"nu"}, {"lambda"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.14", "lambda!=0, eta=1, nu=lambda, mu free", "110101100",
              D("j42", "j53", "j61"), {{"j42", 1}, {"j53", 1}, {"j61", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = 1; c.nu = c.lambda; c.mu = pv(p, "mu"); return c; },
              {"mu"}, {"lambda"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.15", "lambda!=0, eta=lambda, mu=1, nu free", "101100110",
              D("j43", "j51", "j62"), {{"j43", 1}, {"j51", 1}, {"j62", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = c.lambda; c.nu = pv(p, "nu"); c.mu = 1; return c; },
              {"nu"}, {"lambda"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.16", "lambda!=0, eta=lambda, nu=1, mu free", "101110100",
              Dneg("j43", "j52", "j61"), {{"j43", 1}, {"j52", 1}, {"j61", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = c.lambda; c.nu = 1; c.mu = pv(p, "mu"); return c; },
              {"mu"}, {"lambda"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.17", "lambda!=0, nu=1, mu=lambda, eta free", "100110101",
              D("j41", "j52", "j63"), {{"j41", 1}, {"j52", 1}, {"j63", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = pv(p, "eta"); c.nu = 1; c.mu = c.lambda; return c; },
              {"eta"}, {"lambda"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.18", "lambda!=0, nu=lambda, mu=1, eta free", "100101110",
              Dneg("j41", "j53", "j62"), {{"j41", 1}, {"j53", 1}, {"j62", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = pv(p, "eta"); c.nu = c.lambda; c.mu = 1; return c; },
              {"eta"}, {"lambda"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.19", "lambda!=0, eta=1, nu=mu=lambda", "110101101",
              D2("j42", "j51", "j63", -1, "j42", "j53", "j61", +1),
              {{"j42", 1}, {"j53", 1}, {"j61", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = 1; c.nu = c.lambda; c.mu = c.lambda; return c; },
              {}, {"lambda"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.20", "lambda!=0, eta=nu=1, mu=lambda", "110110101",
              D2("j41", "j52", "j63", +1, "j42", "j51", "j63", -1),
              {{"j41", 1}, {"j52", 1}, {"j63", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = 1; c.nu = 1; c.mu = c.lambda; return c; },
              {}, {"lambda"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.21", "lambda!=0, eta=mu=1, nu=lambda", "110101110",
              D2("j41", "j53", "j62", -1, "j42", "j53", "j61", +1),
              {{"j42", 1}, {"j53", 1}, {"j61", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = 1; c.nu = c.lambda; c.mu = 1; return c; },
              {}, {"lambda"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.22", "lambda!=0, eta=mu=lambda, nu=1", "101110101",
              D2("j41", "j52", "j63", +1, "j43", "j52", "j61", -1),
              {{"j41", 1}, {"j52", 1}, {"j63", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = c.lambda; c.nu = 1; c.mu = c.lambda; return c; },
              {}, {"lambda"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.23", "lambda!=0, eta=nu=lambda, mu=1", "101101110",
              D2("j41", "j53", "j62", -1, "j43", "j51", "j62", +1),
              {{"j43", 1}, {"j51", 1}, {"j62", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = c.lambda; c.nu = c.lambda; c.mu = 1; return c; },
              {}, {"lambda"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.24", "lambda!=0, eta=lambda, nu=mu=1", "101110110",
              D2("j43", "j51", "j62", +1, "j43", "j52", "j61", -1),
              {{"j43", 1}, {"j51", 1}, {"j62", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = c.lambda; c.nu = 1; c.mu = 1; return c; },
              {}, {"lambda"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.25", "lambda=1, eta=1, mu=1, nu free", "111100111",
              [](const EntryMap& e) {
                return -jv(e, "j51") * (jv(e, "j42") * jv(e, "j63") - jv(e, "j43") * jv(e, "j62"));
              },
              {{"j51", 1}, {"j42", 1}, {"j63", 1}},
              [](const ParamMap& p) { CaseParams c; c.lambda = 1; c.eta = 1; c.nu = pv(p, "nu"); c.mu = 1; return c; },
              {"nu"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.26", "lambda=1, eta=1, nu=1, mu free", "111111100",
              [](const EntryMap& e) {
                return jv(e, "j61") * (jv(e, "j42") * jv(e, "j53") - jv(e, "j43") * jv(e, "j52"));
              },
              {{"j61", 1}, {"j42", 1}, {"j53", 1}},
              [](const ParamMap& p) { CaseParams c; c.lambda = 1; c.eta = 1; c.nu = 1; c.mu = pv(p, "mu"); return c; },
              {"mu"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.27", "lambda=1, nu=1, mu=1, eta free", "100111111",
              [](const EntryMap& e) {
                return jv(e, "j41") * (jv(e, "j52") * jv(e, "j63") - jv(e, "j53") * jv(e, "j62"));
              },
              {{"j41", 1}, {"j52", 1}, {"j63", 1}},
              [](const ParamMap& p) { CaseParams c; c.lambda = 1; c.eta = pv(p, "eta"); c.nu = 1; c.mu = 1; return c; },
              {"eta"}});
    add_mask(1, KFamily::R3Lambda, RepType::I,
             {"T1.III.i.28", "lambda=eta=nu=mu=1", "111111111",
              [](const EntryMap& e) {
                Matrix j{{jv(e, "j41"), jv(e, "j42"), jv(e, "j43")},
                         {jv(e, "j51"), jv(e, "j52"), jv(e, "j53")},
                         {jv(e, "j61"), jv(e, "j62"), jv(e, "j63")}};
                return determinant(j);
              },
              {{"j41", 1}, {"j52", 1}, {"j63", 1}},
              [](const ParamMap&) { CaseParams c; c.lambda = 1; c.eta = 1; c.nu = 1; c.mu = 1; return c; }});

    // (ii): the six real families among the twenty-six.
    add_mask(1, KFamily::R3Lambda, RepType::II,
             {"T1.III.ii.1", "lambda=0, eta=1, nu=0, mu=0, eps=0", "110101101",
              D2("j51", "j42", "j63", -1, "j61", "j42", "j53", +1),
              {{"j42", 1}, {"j53", 1}, {"j61", 1}}, fix(1, 0, 0, 0)});
    add_mask(1, KFamily::R3Lambda, RepType::II,
             {"T1.III.ii.2", "lambda=0, eta=0, nu=1, mu=0, eps=0", "101110110",
              D2("j43", "j51", "j62", +1, "j43", "j52", "j61", -1),
              {{"j43", 1}, {"j51", 1}, {"j62", 1}}, fix(0, 1, 0, 0)});
    add_mask(1, KFamily::R3Lambda, RepType::II,
             {"T1.III.ii.3", "lambda=1, eta=1, nu=1, mu=0", "111111111",
              [](const EntryMap& e) {
                Matrix j{{jv(e, "j41"), jv(e, "j42"), jv(e, "j43")},
                         {jv(e, "j51"), jv(e, "j52"), jv(e, "j53")},
                         {jv(e, "j61"), jv(e, "j62"), jv(e, "j63")}};
                return determinant(j);
              },
              {{"j41", 1}, {"j52", 1}, {"j63", 1}}, fix(1, 1, 0, 1)});
    add_mask(1, KFamily::R3Lambda, RepType::II,
             {"T1.III.ii.4", "lambda=1, nu=1, mu=0, eta free", "100111111",
              [](const EntryMap& e) {
                return jv(e, "j41") * (jv(e, "j52") * jv(e, "j63") - jv(e, "j53") * jv(e, "j62"));
              },
              {{"j41", 1}, {"j52", 1}, {"j63", 1}},
              [](const ParamMap& p) { CaseParams c; c.lambda = 1; c.eta = pv(p, "eta"); c.nu = 1; c.mu = 0; return c; },
              {"eta"}});
    add_mask(1, KFamily::R3Lambda, RepType::II,
             {"T1.III.ii.5", "lambda=nu!=0, eta=1, mu=0", "110101101",
              D2("j42", "j51", "j63", -1, "j42", "j53", "j61", +1),
              {{"j42", 1}, {"j53", 1}, {"j61", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = 1; c.nu = c.lambda; c.mu = 0; return c; },
              {}, {"lambda"}});
    add_mask(1, KFamily::R3Lambda, RepType::II,
             {"T1.III.ii.6", "lambda!=0, eta=lambda, nu=1, mu=0", "101110110",
              D2("j43", "j51", "j62", +1, "j43", "j52", "j61", -1),
              {{"j43", 1}, {"j51", 1}, {"j62", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = c.lambda; c.nu = 1; c.mu = 0; return c; },
              {}, {"lambda"}});

    // (iii): all five families are real.
    add_mask(1, KFamily::R3Lambda, RepType::III,
             {"T1.III.iii.1", "lambda=0, eta=1, nu=0, eps=0", "110101100",
              D("j42", "j53", "j61"), {{"j42", 1}, {"j53", 1}, {"j61", 1}},
              [](const ParamMap&) { CaseParams c; c.lambda = 0; c.eta = 1; c.nu = 0; return c; }});
    add_mask(1, KFamily::R3Lambda, RepType::III,
             {"T1.III.iii.2", "lambda=0, eta=0, nu=1, eps=0", "101110100",
              Dneg("j43", "j52", "j61"), {{"j43", 1}, {"j52", 1}, {"j61", 1}},
              [](const ParamMap&) { CaseParams c; c.lambda = 0; c.eta = 0; c.nu = 1; return c; }});
    add_mask(1, KFamily::R3Lambda, RepType::III,
             {"T1.III.iii.3", "lambda=nu!=0, eta=1", "110101100",
              D("j42", "j53", "j61"), {{"j42", 1}, {"j53", 1}, {"j61", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = 1; c.nu = c.lambda; return c; },
              {}, {"lambda"}});
    add_mask(1, KFamily::R3Lambda, RepType::III,
             {"T1.III.iii.4", "lambda!=0, eta=lambda, nu=1", "101110100",
              Dneg("j43", "j52", "j61"), {{"j43", 1}, {"j52", 1}, {"j61", 1}},
              [lam](const ParamMap& p) { CaseParams c; c.lambda = lam(p); c.eta = c.lambda; c.nu = 1; return c; },
              {}, {"lambda"}});
    add_mask(1, KFamily::R3Lambda, RepType::III,
             {"T1.III.iii.5", "lambda=eta=nu=1", "111111100",
              [](const EntryMap& e) {
                return jv(e, "j61") * (jv(e, "j42") * jv(e, "j53") - jv(e, "j43") * jv(e, "j52"));
              },
              {{"j61", 1}, {"j42", 1}, {"j53", 1}},
              [](const ParamMap&) { CaseParams c; c.lambda = 1; c.eta = 1; c.nu = 1; return c; }});

    // CASE IV: k = r3_delta. Four real type (i) families, delta = 0.
    auto fixd = [](Rational eta, Rational nu, Rational mu, Rational delta) {
      return [=](const ParamMap&) {
        CaseParams c;
        c.eta = eta; c.nu = nu; c.mu = mu; c.delta = delta;
        return c;
      };
    };
    add_mask(1, KFamily::R3Delta, RepType::I,
             {"T1.IV.i.1", "delta=0, nu=1, mu=1, eta free", "100111111",
              [](const EntryMap& e) {
                return jv(e, "j41") * (jv(e, "j52") * jv(e, "j63") - jv(e, "j53") * jv(e, "j62"));
              },
              {{"j41", 1}, {"j52", 1}, {"j63", 1}},
              [](const ParamMap& p) { CaseParams c; c.delta = 0; c.eta = pv(p, "eta"); c.nu = 1; c.mu = 1; return c; },
              {"eta"}});
    add_mask(1, KFamily::R3Delta, RepType::I,
             {"T1.IV.i.2", "delta=0, eta=1, nu=1, mu=1 (full shape)", "111111111",
              [](const EntryMap& e) {
                Matrix j{{jv(e, "j41"), jv(e, "j42"), jv(e, "j43")},
                         {jv(e, "j51"), jv(e, "j52"), jv(e, "j53")},
                         {jv(e, "j61"), jv(e, "j62"), jv(e, "j63")}};
                return determinant(j);
              },
              {{"j41", 1}, {"j52", 1}, {"j63", 1}}, fixd(1, 1, 1, 0)});
    add_mask(1, KFamily::R3Delta, RepType::I,
             {"T1.IV.i.3", "delta=0, eta=1, mu=1, nu free (middle row zero)", "111100111",
              [](const EntryMap& e) {
                return -jv(e, "j51") * (jv(e, "j42") * jv(e, "j63") - jv(e, "j43") * jv(e, "j62"));
              },
              {{"j51", 1}, {"j42", 1}, {"j63", 1}},
              [](const ParamMap& p) { CaseParams c; c.delta = 0; c.eta = 1; c.nu = pv(p, "nu"); c.mu = 1; return c; },
              {"nu"}});
    add_mask(1, KFamily::R3Delta, RepType::I,
             {"T1.IV.i.4", "delta=0, eta=1, nu=1, mu free", "111111100",
              [](const EntryMap& e) {
                return jv(e, "j61") * (jv(e, "j42") * jv(e, "j53") - jv(e, "j43") * jv(e, "j52"));
              },
              {{"j61", 1}, {"j42", 1}, {"j53", 1}},
              [](const ParamMap& p) { CaseParams c; c.delta = 0; c.eta = 1; c.nu = 1; c.mu = pv(p, "mu"); return c; },
              {"mu"}});

    // Type (ii): the coupled rotation shapes delta = +-mu plus two delta = 0.
    {
      WitnessFamily f;
      f.id = "T1.IV.ii.1";
      f.table = 1;
      f.k_family = KFamily::R3Delta;
      f.rep_type = RepType::II;
      f.param_label = "delta=mu, nu=1, eta and mu free";
      f.free_params = {"eta", "mu"};
      f.entries = {"j41", "j51", "j61", "j62", "j63"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.eta = pv(p, "eta"); c.nu = 1; c.mu = pv(p, "mu"); c.delta = c.mu;
        return c;
      };
      f.shape = [](const CaseParams&, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), 0, 0},
                      {jv(e, "j51"), jv(e, "j63"), -jv(e, "j62")},
                      {jv(e, "j61"), jv(e, "j62"), jv(e, "j63")}};
      };
      f.det = [](const CaseParams&, const EntryMap& e) {
        return jv(e, "j41") * (jv(e, "j62") * jv(e, "j62") + jv(e, "j63") * jv(e, "j63"));
      };
      f.default_params = {{"eta", 1}, {"mu", 1}};
      f.default_entries = {{"j41", 1}, {"j63", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T1.IV.ii.2";
      f.table = 1;
      f.k_family = KFamily::R3Delta;
      f.rep_type = RepType::II;
      f.param_label = "delta=-mu, nu=1, eta and mu free";
      f.free_params = {"eta", "mu"};
      f.entries = {"j41", "j51", "j61", "j62", "j63"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.eta = pv(p, "eta"); c.nu = 1; c.mu = pv(p, "mu"); c.delta = -c.mu;
        return c;
      };
      f.shape = [](const CaseParams&, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), 0, 0},
                      {jv(e, "j51"), -jv(e, "j63"), jv(e, "j62")},
                      {jv(e, "j61"), jv(e, "j62"), jv(e, "j63")}};
      };
      f.det = [](const CaseParams&, const EntryMap& e) {
        return jv(e, "j41") * (-(jv(e, "j62") * jv(e, "j62")) - jv(e, "j63") * jv(e, "j63"));
      };
      f.default_params = {{"eta", 1}, {"mu", 1}};
      f.default_entries = {{"j41", 1}, {"j63", 1}};
      add(f);
    }
    add_mask(1, KFamily::R3Delta, RepType::II,
             {"T1.IV.ii.3", "delta=0, nu=1, mu=0, eta free", "100111111",
              [](const EntryMap& e) {
                return jv(e, "j41") * (jv(e, "j52") * jv(e, "j63") - jv(e, "j53") * jv(e, "j62"));
              },
              {{"j41", 1}, {"j52", 1}, {"j63", 1}},
              [](const ParamMap& p) { CaseParams c; c.delta = 0; c.eta = pv(p, "eta"); c.nu = 1; c.mu = 0; return c; },
              {"eta"}});
    add_mask(1, KFamily::R3Delta, RepType::II,
             {"T1.IV.ii.4", "delta=0, eta=1, nu=1, mu=0", "111111111",
              [](const EntryMap& e) {
                Matrix j{{jv(e, "j41"), jv(e, "j42"), jv(e, "j43")},
                         {jv(e, "j51"), jv(e, "j52"), jv(e, "j53")},
                         {jv(e, "j61"), jv(e, "j62"), jv(e, "j63")}};
                return determinant(j);
              },
              {{"j41", 1}, {"j52", 1}, {"j63", 1}}, fixd(1, 1, 0, 0)});

    add_mask(1, KFamily::R3Delta, RepType::III,
             {"T1.IV.iii.1", "delta=0, eta=1, nu=1", "111111100",
              [](const EntryMap& e) {
                return jv(e, "j61") * (jv(e, "j42") * jv(e, "j53") - jv(e, "j43") * jv(e, "j52"));
              },
              {{"j61", 1}, {"j42", 1}, {"j53", 1}},
              [](const ParamMap&) { CaseParams c; c.delta = 0; c.eta = 1; c.nu = 1; return c; }});

    // ---------------------------------------------------------------- h = h1

    // CASE I: k = h1, type (i).
    {
      WitnessFamily f;
      f.id = "T2.I.i.1";
      f.table = 2;
      f.k_family = KFamily::H1;
      f.rep_type = RepType::I;
      f.param_label = "nu!=0, mu=-eta^2/nu, eta and eps free";
      f.free_params = {"eta"};
      f.nonzero_params = {"nu"};
      f.eps_params = {"eps"};
      f.entries = {"j41", "j42", "j51", "j52", "j61", "j62"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.eta = pv(p, "eta");
        c.nu = pv(p, "nu");
        c.mu = -(c.eta * c.eta) / c.nu;
        c.eps1 = pv(p, "eps");
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        Rational s = c.eps1 * c.eta * jv(e, "j41") + c.eps1 * c.nu * jv(e, "j51") -
                     c.eta * jv(e, "j42") - c.nu * jv(e, "j52");
        return Matrix{{jv(e, "j41"), jv(e, "j42"), -s},
                      {jv(e, "j51"), jv(e, "j52"), c.eta * s / c.nu},
                      {jv(e, "j61"), jv(e, "j62"), 0}};
      };
      f.det = [](const CaseParams& c, const EntryMap& e) {
        Rational cross = c.eta * jv(e, "j41") * jv(e, "j62") - c.eta * jv(e, "j42") * jv(e, "j61") +
                         c.nu * jv(e, "j51") * jv(e, "j62") - c.nu * jv(e, "j52") * jv(e, "j61");
        Rational s = c.eps1 * c.eta * jv(e, "j41") + c.eps1 * c.nu * jv(e, "j51") -
                     c.eta * jv(e, "j42") - c.nu * jv(e, "j52");
        return -(cross * s) / c.nu;
      };
      f.default_params = {{"eta", 1}, {"nu", 1}, {"eps", 0}};
      f.default_entries = {{"j41", 1}, {"j42", 1}, {"j62", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T2.I.i.2";
      f.table = 2;
      f.k_family = KFamily::H1;
      f.rep_type = RepType::I;
      f.param_label = "eta=0, nu=0, mu and eps free";
      f.free_params = {"mu"};
      f.eps_params = {"eps"};
      f.entries = {"j41", "j42", "j51", "j52", "j61", "j62"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.eta = 0; c.nu = 0; c.mu = pv(p, "mu"); c.eps1 = pv(p, "eps");
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), jv(e, "j42"), 0},
                      {jv(e, "j51"), jv(e, "j52"), -c.eps1 * c.mu * jv(e, "j41") + c.mu * jv(e, "j42")},
                      {jv(e, "j61"), jv(e, "j62"), 0}};
      };
      f.det = [](const CaseParams& c, const EntryMap& e) {
        return c.eps1 * jv(e, "j41") * jv(e, "j41") * jv(e, "j62") * c.mu -
               c.eps1 * jv(e, "j41") * jv(e, "j42") * jv(e, "j61") * c.mu -
               jv(e, "j41") * jv(e, "j42") * jv(e, "j62") * c.mu +
               jv(e, "j42") * jv(e, "j42") * jv(e, "j61") * c.mu;
      };
      f.default_params = {{"mu", 1}, {"eps", 0}};
      f.default_entries = {{"j42", 1}, {"j61", 1}, {"j52", 1}};
      add(f);
    }

    // CASE III: k = r3_lambda, type (i), six families.
    {
      WitnessFamily f;
      f.id = "T2.III.i.1";
      f.table = 2;
      f.k_family = KFamily::R3Lambda;
      f.rep_type = RepType::I;
      f.param_label = "lambda=0, nu!=0, mu=-(eta^2-1)/nu, eps=0";
      f.free_params = {"eta"};
      f.nonzero_params = {"nu"};
      f.entries = {"j41", "j42", "j51", "j61", "j63"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.lambda = 0;
        c.eta = pv(p, "eta");
        c.nu = pv(p, "nu");
        c.mu = -(c.eta * c.eta - 1) / c.nu;
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), jv(e, "j42"), 0},
                      {jv(e, "j51"), -jv(e, "j42") * (c.eta - 1) / c.nu, 0},
                      {jv(e, "j61"), 0, jv(e, "j63")}};
      };
      f.det = [](const CaseParams& c, const EntryMap& e) {
        return -(jv(e, "j42") * jv(e, "j63") *
                 (c.eta * jv(e, "j41") + jv(e, "j51") * c.nu - jv(e, "j41"))) / c.nu;
      };
      f.default_params = {{"eta", 0}, {"nu", 1}};
      f.default_entries = {{"j42", 1}, {"j63", 1}, {"j51", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T2.III.i.2";
      f.table = 2;
      f.k_family = KFamily::R3Lambda;
      f.rep_type = RepType::I;
      f.param_label = "lambda=0, eta=1, nu=0, mu free, eps=0";
      f.free_params = {"mu"};
      f.entries = {"j41", "j42", "j51", "j61", "j63"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.lambda = 0; c.eta = 1; c.nu = 0; c.mu = pv(p, "mu");
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), jv(e, "j42"), 0},
                      {jv(e, "j51"), Rational(1, 2) * jv(e, "j42") * c.mu, 0},
                      {jv(e, "j61"), 0, jv(e, "j63")}};
      };
      f.det = [](const CaseParams& c, const EntryMap& e) {
        return Rational(1, 2) * jv(e, "j41") * jv(e, "j42") * c.mu * jv(e, "j63") -
               jv(e, "j42") * jv(e, "j51") * jv(e, "j63");
      };
      f.default_params = {{"mu", 1}};
      f.default_entries = {{"j42", 1}, {"j51", 1}, {"j63", 1}};
      add(f);
    }
    add_mask(2, KFamily::R3Lambda, RepType::I,
             {"T2.III.i.3", "lambda=0, eta=-1, nu=0, mu free, eps=0", "100110101",
              D("j41", "j52", "j63"), {{"j41", 1}, {"j52", 1}, {"j63", 1}},
              [](const ParamMap& p) { CaseParams c; c.lambda = 0; c.eta = -1; c.nu = 0; c.mu = pv(p, "mu"); return c; },
              {"mu"}});
    {
      WitnessFamily f;
      f.id = "T2.III.i.4";
      f.table = 2;
      f.k_family = KFamily::R3Lambda;
      f.rep_type = RepType::I;
      f.param_label = "lambda=-1, eta=1, mu=0, nu free";
      f.free_params = {"nu"};
      f.entries = {"j41", "j42", "j51", "j53", "j61"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.lambda = -1; c.eta = 1; c.nu = pv(p, "nu"); c.mu = 0;
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), jv(e, "j42"), Rational(-1, 2) * jv(e, "j53") * c.nu},
                      {jv(e, "j51"), 0, jv(e, "j53")},
                      {jv(e, "j61"), 0, 0}};
      };
      f.det = [](const CaseParams&, const EntryMap& e) {
        return jv(e, "j42") * jv(e, "j53") * jv(e, "j61");
      };
      f.default_params = {{"nu", 1}};
      f.default_entries = {{"j42", 1}, {"j53", 1}, {"j61", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T2.III.i.5";
      f.table = 2;
      f.k_family = KFamily::R3Lambda;
      f.rep_type = RepType::I;
      f.param_label = "lambda=-1, eta=(j43 mu + j53)/j53, nu=-(j43 mu + 2 j53) j43/j53^2";
      f.nonzero_params = {"mu"};
      f.entries = {"j41", "j43", "j51", "j52", "j53", "j61"};
      f.sampled_entries = {"j43", "j53"};
      f.derive = [](const ParamMap& p, const EntryMap& e) {
        CaseParams c;
        c.lambda = -1;
        c.mu = pv(p, "mu");
        Rational j43 = jv(e, "j43"), j53 = jv(e, "j53");
        c.eta = (j43 * c.mu + j53) / j53;
        c.nu = -((j43 * c.mu + 2 * j53) * j43) / (j53 * j53);
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"),
                       jv(e, "j52") * (jv(e, "j43") * c.mu + 2 * jv(e, "j53")) / (jv(e, "j53") * c.mu),
                       jv(e, "j43")},
                      {jv(e, "j51"), jv(e, "j52"), jv(e, "j53")},
                      {jv(e, "j61"), 0, 0}};
      };
      f.det = [](const CaseParams& c, const EntryMap& e) {
        return 2 * jv(e, "j61") * jv(e, "j52") * jv(e, "j53") / c.mu;
      };
      f.default_params = {{"mu", 1}};
      f.default_entries = {{"j43", 1}, {"j53", 1}, {"j52", 1}, {"j61", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T2.III.i.6";
      f.table = 2;
      f.k_family = KFamily::R3Lambda;
      f.rep_type = RepType::I;
      f.param_label = "lambda=-1, eta=-1, nu=2 j42/j52, mu=0";
      f.entries = {"j41", "j42", "j43", "j51", "j52", "j61"};
      f.sampled_entries = {"j42", "j52"};
      f.derive = [](const ParamMap&, const EntryMap& e) {
        CaseParams c;
        c.lambda = -1; c.eta = -1; c.mu = 0;
        c.nu = 2 * jv(e, "j42") / jv(e, "j52");
        return c;
      };
      f.shape = [](const CaseParams&, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), jv(e, "j42"), jv(e, "j43")},
                      {jv(e, "j51"), jv(e, "j52"), 0},
                      {jv(e, "j61"), 0, 0}};
      };
      f.det = [](const CaseParams&, const EntryMap& e) {
        return -(jv(e, "j43") * jv(e, "j52") * jv(e, "j61"));
      };
      f.default_entries = {{"j42", 1}, {"j52", 1}, {"j43", 1}, {"j61", 1}};
      add(f);
    }

    // CASE III, type (ii), eleven families.
    {
      WitnessFamily f;
      f.id = "T2.III.ii.1";
      f.table = 2;
      f.k_family = KFamily::R3Lambda;
      f.rep_type = RepType::II;
      f.param_label = "lambda=0, eta!=0, nu!=0, mu=-eta(eta-1)/nu, eps=0";
      f.nonzero_params = {"eta", "nu"};
      f.entries = {"j41", "j42", "j51", "j53", "j61", "j62"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.lambda = 0;
        c.eta = pv(p, "eta");
        c.nu = pv(p, "nu");
        c.mu = -(c.eta * (c.eta - 1)) / c.nu;
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), jv(e, "j42"), -jv(e, "j53") * c.nu / c.eta},
                      {jv(e, "j51"), -jv(e, "j42") * (c.eta - 1) / c.nu, jv(e, "j53")},
                      {jv(e, "j61"), jv(e, "j62"), 0}};
      };
      f.det = [](const CaseParams& c, const EntryMap& e) {
        return -(jv(e, "j53") * (c.eta * jv(e, "j41") * jv(e, "j62") +
                                 jv(e, "j51") * jv(e, "j62") * c.nu - jv(e, "j42") * jv(e, "j61"))) /
               c.eta;
      };
      f.default_params = {{"eta", 1}, {"nu", 1}};
      f.default_entries = {{"j53", 1}, {"j41", 1}, {"j62", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T2.III.ii.2";
      f.table = 2;
      f.k_family = KFamily::R3Lambda;
      f.rep_type = RepType::II;
      f.param_label = "lambda=0, eta=1, nu=0, mu free, eps=0";
      f.free_params = {"mu"};
      f.entries = {"j41", "j42", "j51", "j53", "j61", "j62"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.lambda = 0; c.eta = 1; c.nu = 0; c.mu = pv(p, "mu");
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), jv(e, "j42"), 0},
                      {jv(e, "j51"), c.mu * jv(e, "j42"), jv(e, "j53")},
                      {jv(e, "j61"), jv(e, "j62"), 0}};
      };
      f.det = [](const CaseParams&, const EntryMap& e) {
        return -jv(e, "j41") * jv(e, "j53") * jv(e, "j62") +
               jv(e, "j42") * jv(e, "j53") * jv(e, "j61");
      };
      f.default_params = {{"mu", 1}};
      f.default_entries = {{"j42", 1}, {"j53", 1}, {"j61", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T2.III.ii.3";
      f.table = 2;
      f.k_family = KFamily::R3Lambda;
      f.rep_type = RepType::II;
      f.param_label = "lambda=0, eta=0, mu=0, nu free, eps=0";
      f.free_params = {"nu"};
      f.entries = {"j41", "j43", "j51", "j52", "j61", "j62"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.lambda = 0; c.eta = 0; c.nu = pv(p, "nu"); c.mu = 0;
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), c.nu * jv(e, "j52"), jv(e, "j43")},
                      {jv(e, "j51"), jv(e, "j52"), 0},
                      {jv(e, "j61"), jv(e, "j62"), 0}};
      };
      f.det = [](const CaseParams&, const EntryMap& e) {
        return jv(e, "j43") * jv(e, "j51") * jv(e, "j62") -
               jv(e, "j43") * jv(e, "j52") * jv(e, "j61");
      };
      f.default_params = {{"nu", 1}};
      f.default_entries = {{"j43", 1}, {"j51", 1}, {"j62", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T2.III.ii.4";
      f.table = 2;
      f.k_family = KFamily::R3Lambda;
      f.rep_type = RepType::II;
      f.param_label = "lambda=0, eta=0, nu=0, mu free, eps=0";
      f.free_params = {"mu"};
      f.entries = {"j41", "j43", "j51", "j52", "j61", "j62"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.lambda = 0; c.eta = 0; c.nu = 0; c.mu = pv(p, "mu");
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), 0, jv(e, "j43")},
                      {jv(e, "j51"), jv(e, "j52"), -c.mu * jv(e, "j43")},
                      {jv(e, "j61"), jv(e, "j62"), 0}};
      };
      f.det = [](const CaseParams& c, const EntryMap& e) {
        return jv(e, "j41") * c.mu * jv(e, "j43") * jv(e, "j62") +
               jv(e, "j43") * jv(e, "j51") * jv(e, "j62") -
               jv(e, "j43") * jv(e, "j52") * jv(e, "j61");
      };
      f.default_params = {{"mu", 1}};
      f.default_entries = {{"j43", 1}, {"j51", 1}, {"j62", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T2.III.ii.5";
      f.table = 2;
      f.k_family = KFamily::R3Lambda;
      f.rep_type = RepType::II;
      f.param_label = "lambda=0, eta=0, nu=0, mu=-j53/j43, eps=0";
      f.entries = {"j41", "j43", "j51", "j52", "j53", "j61"};
      f.sampled_entries = {"j43", "j53"};
      f.derive = [](const ParamMap&, const EntryMap& e) {
        CaseParams c;
        c.lambda = 0; c.eta = 0; c.nu = 0;
        c.mu = -jv(e, "j53") / jv(e, "j43");
        return c;
      };
      f.shape = [](const CaseParams&, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), 0, jv(e, "j43")},
                      {jv(e, "j51"), jv(e, "j52"), jv(e, "j53")},
                      {jv(e, "j61"), 0, 0}};
      };
      f.det = [](const CaseParams&, const EntryMap& e) {
        return -(jv(e, "j43") * jv(e, "j52") * jv(e, "j61"));
      };
      f.default_entries = {{"j43", 1}, {"j53", 1}, {"j52", 1}, {"j61", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T2.III.ii.6";
      f.table = 2;
      f.k_family = KFamily::R3Lambda;
      f.rep_type = RepType::II;
      f.param_label = "lambda=1, nu!=0, mu=-eta(eta-1)/nu, eta free";
      f.free_params = {"eta"};
      f.nonzero_params = {"nu"};
      f.entries = {"j41", "j42", "j43", "j51", "j61", "j62", "j63"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.lambda = 1;
        c.eta = pv(p, "eta");
        c.nu = pv(p, "nu");
        c.mu = -(c.eta * (c.eta - 1)) / c.nu;
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), jv(e, "j42"), jv(e, "j43")},
                      {jv(e, "j51"), -(c.eta - 1) * jv(e, "j42") / c.nu, -jv(e, "j43") * (c.eta - 1) / c.nu},
                      {jv(e, "j61"), jv(e, "j62"), jv(e, "j63")}};
      };
      f.det = [](const CaseParams& c, const EntryMap& e) {
        return -((jv(e, "j42") * jv(e, "j63") - jv(e, "j43") * jv(e, "j62")) *
                 (c.eta * jv(e, "j41") + jv(e, "j51") * c.nu - jv(e, "j41"))) / c.nu;
      };
      f.default_params = {{"eta", 0}, {"nu", 1}};
      f.default_entries = {{"j42", 1}, {"j63", 1}, {"j51", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T2.III.ii.7";
      f.table = 2;
      f.k_family = KFamily::R3Lambda;
      f.rep_type = RepType::II;
      f.param_label = "lambda=1, eta=1, nu=0, mu free";
      f.free_params = {"mu"};
      f.entries = {"j41", "j42", "j43", "j51", "j61", "j62", "j63"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.lambda = 1; c.eta = 1; c.nu = 0; c.mu = pv(p, "mu");
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), jv(e, "j42"), jv(e, "j43")},
                      {jv(e, "j51"), c.mu * jv(e, "j42"), c.mu * jv(e, "j43")},
                      {jv(e, "j61"), jv(e, "j62"), jv(e, "j63")}};
      };
      f.det = [](const CaseParams& c, const EntryMap& e) {
        return jv(e, "j41") * c.mu * jv(e, "j42") * jv(e, "j63") -
               jv(e, "j41") * c.mu * jv(e, "j43") * jv(e, "j62") -
               jv(e, "j42") * jv(e, "j51") * jv(e, "j63") +
               jv(e, "j43") * jv(e, "j51") * jv(e, "j62");
      };
      f.default_params = {{"mu", 1}};
      f.default_entries = {{"j42", 1}, {"j51", 1}, {"j63", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T2.III.ii.8";
      f.table = 2;
      f.k_family = KFamily::R3Lambda;
      f.rep_type = RepType::II;
      f.param_label = "lambda=1, eta=0, mu=0, nu free";
      f.free_params = {"nu"};
      f.entries = {"j41", "j51", "j52", "j53", "j61", "j62", "j63"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.lambda = 1; c.eta = 0; c.nu = pv(p, "nu"); c.mu = 0;
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), jv(e, "j52") * c.nu, jv(e, "j53") * c.nu},
                      {jv(e, "j51"), jv(e, "j52"), jv(e, "j53")},
                      {jv(e, "j61"), jv(e, "j62"), jv(e, "j63")}};
      };
      f.det = [](const CaseParams& c, const EntryMap& e) {
        return -jv(e, "j52") * c.nu * jv(e, "j51") * jv(e, "j63") +
               jv(e, "j53") * c.nu * jv(e, "j51") * jv(e, "j62") +
               jv(e, "j41") * jv(e, "j52") * jv(e, "j63") -
               jv(e, "j41") * jv(e, "j53") * jv(e, "j62");
      };
      f.default_params = {{"nu", 1}};
      f.default_entries = {{"j41", 1}, {"j52", 1}, {"j63", 1}};
      add(f);
    }
    add_mask(2, KFamily::R3Lambda, RepType::II,
             {"T2.III.ii.9", "lambda=1, eta=0, nu=0, mu free", "100111111",
              [](const EntryMap& e) {
                return jv(e, "j41") * (jv(e, "j52") * jv(e, "j63") - jv(e, "j53") * jv(e, "j62"));
              },
              {{"j41", 1}, {"j52", 1}, {"j63", 1}},
              [](const ParamMap& p) { CaseParams c; c.lambda = 1; c.eta = 0; c.nu = 0; c.mu = pv(p, "mu"); return c; },
              {"mu"}});
    {
      WitnessFamily f;
      f.id = "T2.III.ii.10";
      f.table = 2;
      f.k_family = KFamily::R3Lambda;
      f.rep_type = RepType::II;
      f.param_label = "lambda!=0, eta=(mu j43 - lambda j53 + j53)/j53, nu=-j43(mu j43 - 2 lambda j53 + j53)/j53^2";
      f.free_params = {"mu"};
      f.nonzero_params = {"lambda"};
      f.entries = {"j41", "j43", "j51", "j53", "j61", "j62"};
      f.sampled_entries = {"j43", "j53"};
      f.derive = [](const ParamMap& p, const EntryMap& e) {
        CaseParams c;
        c.lambda = pv(p, "lambda");
        c.mu = pv(p, "mu");
        Rational j43 = jv(e, "j43"), j53 = jv(e, "j53");
        c.eta = (c.mu * j43 - c.lambda * j53 + j53) / j53;
        c.nu = -(j43 * (c.mu * j43 - 2 * c.lambda * j53 + j53)) / (j53 * j53);
        return c;
      };
      f.shape = [](const CaseParams&, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), 0, jv(e, "j43")},
                      {jv(e, "j51"), 0, jv(e, "j53")},
                      {jv(e, "j61"), jv(e, "j62"), 0}};
      };
      f.det = [](const CaseParams&, const EntryMap& e) {
        return -jv(e, "j41") * jv(e, "j53") * jv(e, "j62") +
               jv(e, "j43") * jv(e, "j51") * jv(e, "j62");
      };
      f.default_params = {{"lambda", 2}, {"mu", 1}};
      f.default_entries = {{"j43", 1}, {"j53", 1}, {"j41", 1}, {"j62", 1}};
      add(f);
    }
    add_mask(2, KFamily::R3Lambda, RepType::II,
             {"T2.III.ii.11", "lambda!=0, eta=lambda, mu=0, nu free", "101100110",
              D("j43", "j51", "j62"), {{"j43", 1}, {"j51", 1}, {"j62", 1}},
              [lam](const ParamMap& p) {
                CaseParams c;
                c.lambda = lam(p); c.eta = c.lambda; c.nu = pv(p, "nu"); c.mu = 0;
                return c;
              },
              {"nu"}, {"lambda"}});

    // CASE IV: k = r3_delta, type (ii), four real families (delta = 0).
    {
      WitnessFamily f;
      f.id = "T2.IV.ii.1";
      f.table = 2;
      f.k_family = KFamily::R3Delta;
      f.rep_type = RepType::II;
      f.param_label = "delta=0, nu!=0, mu=-eta(eta-1)/nu, eta free";
      f.free_params = {"eta"};
      f.nonzero_params = {"nu"};
      f.entries = {"j41", "j42", "j43", "j51", "j61", "j62", "j63"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.delta = 0;
        c.eta = pv(p, "eta");
        c.nu = pv(p, "nu");
        c.mu = -(c.eta * (c.eta - 1)) / c.nu;
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), jv(e, "j42"), jv(e, "j43")},
                      {jv(e, "j51"), -(c.eta - 1) * jv(e, "j42") / c.nu, -(c.eta - 1) * jv(e, "j43") / c.nu},
                      {jv(e, "j61"), jv(e, "j62"), jv(e, "j63")}};
      };
      f.det = [](const CaseParams& c, const EntryMap& e) {
        return -((jv(e, "j42") * jv(e, "j63") - jv(e, "j43") * jv(e, "j62")) *
                 (c.eta * jv(e, "j41") + c.nu * jv(e, "j51") - jv(e, "j41"))) / c.nu;
      };
      f.default_params = {{"eta", 0}, {"nu", 1}};
      f.default_entries = {{"j42", 1}, {"j63", 1}, {"j51", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T2.IV.ii.2";
      f.table = 2;
      f.k_family = KFamily::R3Delta;
      f.rep_type = RepType::II;
      f.param_label = "delta=0, eta=1, nu=0, mu free";
      f.free_params = {"mu"};
      f.entries = {"j41", "j42", "j43", "j51", "j61", "j62", "j63"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.delta = 0; c.eta = 1; c.nu = 0; c.mu = pv(p, "mu");
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), jv(e, "j42"), jv(e, "j43")},
                      {jv(e, "j51"), c.mu * jv(e, "j42"), c.mu * jv(e, "j43")},
                      {jv(e, "j61"), jv(e, "j62"), jv(e, "j63")}};
      };
      f.det = [](const CaseParams& c, const EntryMap& e) {
        return jv(e, "j41") * c.mu * jv(e, "j42") * jv(e, "j63") -
               jv(e, "j41") * c.mu * jv(e, "j43") * jv(e, "j62") -
               jv(e, "j42") * jv(e, "j51") * jv(e, "j63") +
               jv(e, "j43") * jv(e, "j51") * jv(e, "j62");
      };
      f.default_params = {{"mu", 1}};
      f.default_entries = {{"j42", 1}, {"j51", 1}, {"j63", 1}};
      add(f);
    }
    {
      WitnessFamily f;
      f.id = "T2.IV.ii.3";
      f.table = 2;
      f.k_family = KFamily::R3Delta;
      f.rep_type = RepType::II;
      f.param_label = "delta=0, eta=0, mu=0, nu free";
      f.free_params = {"nu"};
      f.entries = {"j41", "j51", "j52", "j53", "j61", "j62", "j63"};
      f.derive = [](const ParamMap& p, const EntryMap&) {
        CaseParams c;
        c.delta = 0; c.eta = 0; c.nu = pv(p, "nu"); c.mu = 0;
        return c;
      };
      f.shape = [](const CaseParams& c, const EntryMap& e) {
        return Matrix{{jv(e, "j41"), c.nu * jv(e, "j52"), c.nu * jv(e, "j53")},
                      {jv(e, "j51"), jv(e, "j52"), jv(e, "j53")},
                      {jv(e, "j61"), jv(e, "j62"), jv(e, "j63")}};
      };
      f.det = [](const CaseParams& c, const EntryMap& e) {
        return -c.nu * jv(e, "j52") * jv(e, "j51") * jv(e, "j63") +
               c.nu * jv(e, "j53") * jv(e, "j51") * jv(e, "j62") +
               jv(e, "j41") * jv(e, "j52") * jv(e, "j63") -
               jv(e, "j41") * jv(e, "j53") * jv(e, "j62");
      };
      f.default_params = {{"nu", 1}};
      f.default_entries = {{"j41", 1}, {"j52", 1}, {"j63", 1}};
      add(f);
    }
    add_mask(2, KFamily::R3Delta, RepType::II,
             {"T2.IV.ii.4", "delta=0, eta=0, nu=0, mu free", "100111111",
              [](const EntryMap& e) {
                return jv(e, "j41") * (jv(e, "j52") * jv(e, "j63") - jv(e, "j53") * jv(e, "j62"));
              },
              {{"j41", 1}, {"j52", 1}, {"j63", 1}},
              [](const ParamMap& p) { CaseParams c; c.delta = 0; c.eta = 0; c.nu = 0; c.mu = pv(p, "mu"); return c; },
              {"mu"}});

    // ------------------------------------------------- complex-only families
    // Present in the appendix for completeness; excluded from rational
    // witness search because their parameters are non-real.
    complex_family("T1.III.ii.c1", 1, KFamily::R3Lambda, RepType::II, "lambda=0, nu=1/2, mu=i/2, eta free");
    complex_family("T1.III.ii.c2", 1, KFamily::R3Lambda, RepType::II, "lambda=0, nu=1/2, mu=-i/2, eta free");
    complex_family("T1.III.ii.c3", 1, KFamily::R3Lambda, RepType::II, "lambda=0, eta=1, nu=1/2, mu=i/2");
    complex_family("T1.III.ii.c4", 1, KFamily::R3Lambda, RepType::II, "lambda=0, eta=1, nu=1/2, mu=-i/2");
    complex_family("T1.III.ii.c5", 1, KFamily::R3Lambda, RepType::II, "lambda=0, eta=0, nu=1/2, mu=i/2");
    complex_family("T1.III.ii.c6", 1, KFamily::R3Lambda, RepType::II, "lambda=0, eta=0, nu=1/2, mu=-i/2");
    complex_family("T1.III.ii.c7", 1, KFamily::R3Lambda, RepType::II, "lambda=2nu-1, mu=i(nu-1), eta free");
    complex_family("T1.III.ii.c8", 1, KFamily::R3Lambda, RepType::II, "lambda=2nu-1, mu=-i(nu-1), eta free");
    complex_family("T1.III.ii.c9", 1, KFamily::R3Lambda, RepType::II, "eta=1, mu=i(lambda-nu)");
    complex_family("T1.III.ii.c10", 1, KFamily::R3Lambda, RepType::II, "eta=1, mu=-i(lambda-nu)");
    complex_family("T1.III.ii.c11", 1, KFamily::R3Lambda, RepType::II, "lambda=1, eta=1, mu=i(nu-1)");
    complex_family("T1.III.ii.c12", 1, KFamily::R3Lambda, RepType::II, "lambda=1, eta=1, mu=-i(nu-1)");
    complex_family("T1.III.ii.c13", 1, KFamily::R3Lambda, RepType::II, "lambda=2nu-1, eta=1, mu=i(nu-1)");
    complex_family("T1.III.ii.c14", 1, KFamily::R3Lambda, RepType::II, "lambda=2nu-1, eta=1, mu=-i(nu-1)");
    complex_family("T1.III.ii.c15", 1, KFamily::R3Lambda, RepType::II, "eta=lambda, mu=i(nu-1)");
    complex_family("T1.III.ii.c16", 1, KFamily::R3Lambda, RepType::II, "eta=lambda, mu=-i(nu-1)");
    complex_family("T1.III.ii.c17", 1, KFamily::R3Lambda, RepType::II, "lambda=1, eta=1, mu=i(nu-1), j43 shape");
    complex_family("T1.III.ii.c18", 1, KFamily::R3Lambda, RepType::II, "lambda=1, eta=1, mu=-i(nu-1), j43 shape");
    complex_family("T1.III.ii.c19", 1, KFamily::R3Lambda, RepType::II, "lambda=2nu-1, eta=2nu-1, mu=i(nu-1)");
    complex_family("T1.III.ii.c20", 1, KFamily::R3Lambda, RepType::II, "lambda=2nu-1, eta=2nu-1, mu=-i(nu-1)");
    complex_family("T1.IV.i.c1", 1, KFamily::R3Delta, RepType::I, "delta=-i(eta-1), nu=-i(eta-1), mu free");
    complex_family("T1.IV.i.c2", 1, KFamily::R3Delta, RepType::I, "delta=i(eta-1), nu=i(eta-1), mu free");
    complex_family("T1.IV.i.c3", 1, KFamily::R3Delta, RepType::I, "delta=-i(nu-1), mu=2-nu, eta free");
    complex_family("T1.IV.i.c4", 1, KFamily::R3Delta, RepType::I, "delta=i(nu-1), mu=2-nu, eta free");
    complex_family("T1.IV.i.c5", 1, KFamily::R3Delta, RepType::I, "delta=-i(eta-1), nu=-i(eta-1), mu=2-eta");
    complex_family("T1.IV.i.c6", 1, KFamily::R3Delta, RepType::I, "delta=i(eta-1), nu=i(eta-1), mu=2-eta");
    complex_family("T1.IV.i.c7", 1, KFamily::R3Delta, RepType::I, "delta=-i(nu-1), eta=nu, mu=2-nu");
    complex_family("T1.IV.i.c8", 1, KFamily::R3Delta, RepType::I, "delta=i(nu-1), eta=nu, mu=2-nu");
    complex_family("T1.IV.i.c9", 1, KFamily::R3Delta, RepType::I, "delta=i(nu-1), eta=2-nu, mu=nu");
    complex_family("T1.IV.i.c10", 1, KFamily::R3Delta, RepType::I, "delta=-i(nu-1), eta=2-nu, mu=2-nu");
    complex_family("T1.IV.i.c11", 1, KFamily::R3Delta, RepType::I, "delta=i(nu-1), eta=2-nu, mu=2-nu");
    complex_family("T1.IV.i.c12", 1, KFamily::R3Delta, RepType::I, "delta=-i(nu-1), eta=2-nu, mu=nu");
    complex_family("T1.IV.ii.c1", 1, KFamily::R3Delta, RepType::II, "delta=mu, eta=-i mu+1, nu=1");
    complex_family("T1.IV.ii.c2", 1, KFamily::R3Delta, RepType::II, "delta=mu, eta=i mu+1, nu=1");
    complex_family("T1.IV.ii.c3", 1, KFamily::R3Delta, RepType::II, "delta=-mu, eta=i mu+1, nu=1");
    complex_family("T1.IV.ii.c4", 1, KFamily::R3Delta, RepType::II, "delta=-mu, eta=-i mu+1, nu=1");
    complex_family("T1.IV.ii.c5", 1, KFamily::R3Delta, RepType::II, "delta=0, eta=1, mu=i(nu-1)");
    complex_family("T1.IV.ii.c6", 1, KFamily::R3Delta, RepType::II, "delta=0, eta=1, mu=-i(nu-1)");
    complex_family("T1.IV.ii.c7", 1, KFamily::R3Delta, RepType::II, "delta=-i nu+i+mu, eta=-i(-i nu+i+mu)+1");
    complex_family("T1.IV.ii.c8", 1, KFamily::R3Delta, RepType::II, "delta=i nu-i+mu, eta=i(i nu-i+mu)+1");
    complex_family("T1.IV.ii.c9", 1, KFamily::R3Delta, RepType::II, "delta=-i nu+i-mu, eta=-i(-i nu+i-mu)+1");
    complex_family("T1.IV.ii.c10", 1, KFamily::R3Delta, RepType::II, "delta=i nu-i-mu, eta=i(i nu-i-mu)+1");
    complex_family("T1.IV.ii.c11", 1, KFamily::R3Delta, RepType::II, "delta=-i(nu-1), eta=-nu+2, mu=0");
    complex_family("T1.IV.ii.c12", 1, KFamily::R3Delta, RepType::II, "delta=i(nu-1), eta=-nu+2, mu=0");
    complex_family("T1.IV.iii.c1", 1, KFamily::R3Delta, RepType::III, "delta=-i(nu-1), eta=-nu+2");
    complex_family("T1.IV.iii.c2", 1, KFamily::R3Delta, RepType::III, "delta=i(nu-1), eta=-nu+2");
    complex_family("T2.IV.i.c1", 2, KFamily::R3Delta, RepType::I, "delta=i, eta=2, nu=i, mu=0");
    complex_family("T2.IV.i.c2", 2, KFamily::R3Delta, RepType::I, "delta=-i, eta=2, nu=-i, mu=0");
    complex_family("T2.IV.i.c3", 2, KFamily::R3Delta, RepType::I, "delta=i, eta=-2, nu=i, mu=0");
    complex_family("T2.IV.i.c4", 2, KFamily::R3Delta, RepType::I, "delta=-i, eta=-2, nu=-i, mu=0");
    complex_family("T2.IV.i.c5", 2, KFamily::R3Delta, RepType::I, "delta=i, nu=i, eta and mu free");
    complex_family("T2.IV.i.c6", 2, KFamily::R3Delta, RepType::I, "delta=-i, nu=-i, eta and mu free");

    return fs;
  }();
  return families;
}

inline const WitnessFamily& witness_family(const std::string& id) {
  for (const auto& f : known_solution_witnesses())
    if (f.id == id) return f;
  throw ValidationError("witness_family: unknown id " + id);
}

}  // namespace liext

#endif
