// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// conormal: command-line front end.
//
//   conormal info FILE
//   conormal hvec FILE
//   conormal tutte FILE
//   conormal nbc FILE [--activity A]
//   conormal expand FILE --power M [--census]
//   conormal verify FILE (--k K | --all) [--monomials]
//   conormal logcheck FILE
//
// Common flags: --format text|json, --output PATH, --backend auto|graph|bases.
// Exit status: 0 when every requested check passes, 1 when a check fails,
// 2 on bad input.

#include <chrono>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lagrangian/activity.hpp"
#include "lagrangian/chow.hpp"
#include "lagrangian/io.hpp"
#include "lagrangian/matroid.hpp"
#include "lagrangian/oracle.hpp"
#include "lagrangian/report.hpp"

namespace {

using namespace lagrangian;

struct RunConfig {
  std::string input;
  std::string backend = "auto";
  std::string format = "text";
  std::string output;
  int activity = -1;
  int power = -1;
  bool census = false;
  int k = -1;
  bool all = false;
  bool monomials = false;
};

struct Outcome {
  std::string text;
  bool passed = true;
};

Json ints(const std::vector<std::int64_t>& v) { return Json(v); }

Json set_json(ESet s) {
  Json out = Json::array();
  for (Element e : s) out.push_back(e);
  return out;
}

MatroidSummary summary(const Matroid& m, const RunConfig& cfg) {
  return {cfg.input, m.size(), m.full_rank()};
}

Outcome cmd_info(const Matroid& m, const RunConfig& cfg) {
  const int bases = static_cast<int>(all_bases(m).size());
  const int corank = m.dual_rank();
  if (cfg.format == "json") {
    Json j;
    j["source"] = cfg.input;
    j["n_plus_1"] = m.size();
    j["rank"] = m.full_rank();
    j["corank"] = corank;
    j["loops"] = set_json(m.loops());
    j["coloops"] = set_json(m.coloops());
    j["bases"] = bases;
    return {dump(j)};
  }
  std::ostringstream out;
  out << cfg.input << "\n"
      << "n+1 = " << m.size() << "\n"
      << "r+1 = " << m.full_rank() << "\n"
      << "corank = " << corank << "\n"
      << "loops = " << to_string(m.loops()) << "\n"
      << "coloops = " << to_string(m.coloops()) << "\n"
      << "bases = " << bases << "\n";
  return {out.str()};
}

Outcome cmd_hvec(const Matroid& m, const RunConfig& cfg) {
  const BrokenCircuitVectors v = fh_vectors(m);
  if (cfg.format == "json") {
    Json j;
    j["source"] = cfg.input;
    j["bc"] = {{"f", ints(v.bc.f)}, {"h", ints(v.bc.h)}};
    j["rbc"] = {{"f", ints(v.rbc.f)}, {"h", ints(v.rbc.h)}};
    j["beta"] = v.beta;
    return {dump(j)};
  }
  std::ostringstream out;
  out << "BC   f " << sequence_text(v.bc.f) << "  h " << sequence_text(v.bc.h)
      << "\n"
      << "RBC  f " << sequence_text(v.rbc.f) << "  h " << sequence_text(v.rbc.h)
      << "\n"
      << "beta " << v.beta << "\n";
  return {out.str()};
}

Outcome cmd_tutte(const Matroid& m, const RunConfig& cfg) {
  const TuttePolynomial t = tutte(m);
  if (cfg.format == "json") {
    Json terms = Json::array();
    for (const auto& [ij, c] : t.coefficients) {
      terms.push_back({{"x", ij.first}, {"y", ij.second}, {"coefficient", c}});
    }
    Json j;
    j["source"] = cfg.input;
    j["terms"] = std::move(terms);
    j["bases"] = t.evaluate_at_one();
    return {dump(j)};
  }
  int max_i = 0, max_j = 0;
  for (const auto& [ij, c] : t.coefficients) {
    max_i = std::max(max_i, ij.first);
    max_j = std::max(max_j, ij.second);
  }
  std::ostringstream out;
  out << "t_{i,j}: rows i = 0.." << max_i << ", columns j = 0.." << max_j << "\n";
  for (int i = 0; i <= max_i; ++i) {
    for (int j = 0; j <= max_j; ++j) {
      out << (j ? " " : "") << t.coefficient(i, j);
    }
    out << "\n";
  }
  out << "T(1,1) = " << t.evaluate_at_one() << "\n";
  return {out.str()};
}

Outcome cmd_nbc(const Matroid& m, const RunConfig& cfg) {
  std::vector<ActivityRecord> bases;
  for (const ActivityRecord& rec : nbc_bases(m)) {
    if (cfg.activity < 0 || rec.internally_active.size() == cfg.activity) {
      bases.push_back(rec);
    }
  }
  if (cfg.format == "json") {
    Json list = Json::array();
    for (const ActivityRecord& rec : bases) {
      list.push_back({{"basis", set_json(rec.basis)},
                      {"internally_active", set_json(rec.internally_active)}});
    }
    Json j;
    j["source"] = cfg.input;
    j["nbc_bases"] = std::move(list);
    return {dump(j)};
  }
  std::ostringstream out;
  for (const ActivityRecord& rec : bases) {
    out << to_string(rec.basis) << "  IA=" << to_string(rec.internally_active)
        << "\n";
  }
  out << bases.size() << " nbc bases\n";
  return {out.str()};
}

void check_range(const char* what, int value, int lo, int hi) {
  if (value < lo || value > hi) {
    throw std::out_of_range(std::string(what) + " must lie in " +
                            std::to_string(lo) + ".." + std::to_string(hi));
  }
}

Outcome cmd_expand(const Matroid& m, const RunConfig& cfg) {
  const ChowEngine engine(m);
  check_range("--power", cfg.power, 0, engine.n() - 1);
  const DeltaExpansion d = canonical_delta_expansion(engine, cfg.power);
  MonomialSum sum;
  for (const ExpansionTable& t : d.tables) sum.add(t.monomial);
  ExpansionReport r;
  r.matroid = summary(m, cfg);
  r.k = engine.n() - 1 - cfg.power;
  r.power = cfg.power;
  for (const auto& [x, c] : sum.terms()) {
    r.monomials.push_back(x);
    r.multiplicities.push_back(c);
  }
  if (cfg.census) r.census = d.census;
  // Only δ^{n-1} has top degree; its term count is h_r.
  if (r.k == 0) {
    r.expected = {fh_vectors(m).bc.h[engine.r()]};
    r.computed = {sum.total()};
  }
  if (cfg.format == "json") return {dump(to_json(r))};
  return {to_text(r)};
}

Outcome cmd_verify(const Matroid& m, const RunConfig& cfg) {
  const ChowEngine engine(m);
  std::vector<int> ks;
  if (cfg.all) {
    ks.resize(engine.r() + 1);
    std::iota(ks.begin(), ks.end(), 0);
  } else {
    check_range("--k", cfg.k, 0, engine.r());
    ks.push_back(cfg.k);
  }
  const BrokenCircuitVectors v = fh_vectors(m);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<TheoremCheck> checks = verify_theorem(engine, ks);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  Outcome outcome;
  Json reports = Json::array();
  std::ostringstream text;
  for (const TheoremCheck& c : checks) {
    ExpansionReport r;
    r.matroid = summary(m, cfg);
    r.k = c.k;
    r.power = engine.n() - c.k - 1;
    for (const auto& [x, mult] : c.theorem_path.sum.terms()) {
      r.monomials.push_back(x);
      r.multiplicities.push_back(mult);
    }
    r.census = c.theorem_path.census;
    r.expected = {v.bc.h[engine.r() - c.k], v.rbc.h[engine.r() - c.k],
                  c.expected};
    r.computed = {c.theorem_path.sum.total(), c.exhaustive.sum.total()};
    const bool h_agree = r.expected[0] == r.expected[1] &&
                         r.expected[1] == r.expected[2];
    r.verification = Verification{c.expected,
                                  c.theorem_path.sum.total(),
                                  c.exhaustive.sum.total(),
                                  c.extended_nbc.total(),
                                  c.bijective,
                                  c.passed() && h_agree};
    outcome.passed &= r.verification->passed;
    if (cfg.format == "json") {
      reports.push_back(to_json(r));
    } else if (cfg.monomials) {
      text << to_text(r);
    } else {
      const Verification& ver = *r.verification;
      text << "k=" << c.k << " expected " << ver.expected << " theorem path "
           << ver.theorem_path << " exhaustive " << ver.exhaustive
           << " bijective " << (ver.bijective ? "yes" : "no") << " -> "
           << (ver.passed ? "PASS" : "FAIL") << "\n";
    }
  }
  if (cfg.format == "json") {
    outcome.text = dump(reports);
  } else {
    const Census& census = checks.front().theorem_path.census;
    text << "peak pending tables " << census.peak_frontier << ", "
         << seconds << " s\n";
    outcome.text = text.str();
  }
  return outcome;
}

Outcome cmd_logcheck(const Matroid& m, const RunConfig& cfg) {
  const BrokenCircuitVectors v = fh_vectors(m);
  const std::vector<std::pair<std::string, std::vector<std::int64_t>>> seqs = {
      {"bc_f", v.bc.f}, {"bc_h", v.bc.h}, {"rbc_f", v.rbc.f}, {"rbc_h", v.rbc.h}};
  Outcome outcome;
  Json j;
  j["source"] = cfg.input;
  std::ostringstream text;
  for (const auto& [name, seq] : seqs) {
    const bool ok = logconcavity_check(seq);
    outcome.passed &= ok;
    j[name] = {{"sequence", ints(seq)}, {"log_concave", ok}};
    text << name << " " << sequence_text(seq) << " "
         << (ok ? "log-concave" : "NOT log-concave") << "\n";
  }
  outcome.text = cfg.format == "json" ? dump(j) : text.str();
  return outcome;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conormal Chow ring expansions of ordered matroids"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", cfg.input, "input .graph or .bases file")
        ->required();
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", cfg.output, "write to this path");
    sub->add_option("--backend", cfg.backend, "input format")
        ->check(CLI::IsMember({"auto", "graph", "bases"}));
  };

  auto* info = app.add_subcommand("info", "ground set, ranks, loops, bases");
  auto* hvec = app.add_subcommand("hvec", "f- and h-vectors of BC and RBC");
  auto* tut = app.add_subcommand("tutte", "Tutte polynomial coefficients");
  auto* nbc = app.add_subcommand("nbc", "nbc bases with internal activity");
  auto* expand = app.add_subcommand("expand", "canonical expansion of delta^m");
  auto* verify =
      app.add_subcommand("verify", "gamma^k delta^(n-k-1) against nbc bases");
  auto* logcheck = app.add_subcommand("logcheck", "log-concavity of f and h");
  for (auto* sub : {info, hvec, tut, nbc, expand, verify, logcheck}) {
    add_common(sub);
  }
  nbc->add_option("--activity", cfg.activity,
                  "keep bases with this many internally active elements");
  expand->add_option("--power", cfg.power, "exponent m")->required();
  expand->add_flag("--census", cfg.census, "include per-power term counts");
  auto* k_opt = verify->add_option("--k", cfg.k, "gamma exponent");
  auto* all_opt = verify->add_flag("--all", cfg.all, "every k in 0..r");
  k_opt->excludes(all_opt);
  verify->add_flag("--monomials", cfg.monomials, "list monomials in text mode");

  CLI11_PARSE(app, argc, argv);
  if (verify->parsed() && cfg.k < 0 && !cfg.all) {
    std::cerr << "verify: pass --k K or --all\n";
    return 2;
  }

  Outcome outcome;
  try {
    const Matroid m = load_matroid(cfg.input, cfg.backend);
    if (info->parsed()) outcome = cmd_info(m, cfg);
    if (hvec->parsed()) outcome = cmd_hvec(m, cfg);
    if (tut->parsed()) outcome = cmd_tutte(m, cfg);
    if (nbc->parsed()) outcome = cmd_nbc(m, cfg);
    if (expand->parsed()) outcome = cmd_expand(m, cfg);
    if (verify->parsed()) outcome = cmd_verify(m, cfg);
    if (logcheck->parsed()) outcome = cmd_logcheck(m, cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  if (cfg.output.empty()) {
    std::cout << outcome.text;
  } else {
    std::ofstream out(cfg.output);
    if (!out) {
      std::cerr << "error: cannot write " << cfg.output << "\n";
      return 2;
    }
    out << outcome.text;
  }
  return outcome.passed ? 0 : 1;
}
