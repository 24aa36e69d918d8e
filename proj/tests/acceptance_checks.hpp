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

// The six acceptance criteria as functions returning a CrossCheckReport,
// shared by the acceptance binary and the property test suite.

#ifndef LAGRANGIAN_TESTS_ACCEPTANCE_CHECKS_HPP_
#define LAGRANGIAN_TESTS_ACCEPTANCE_CHECKS_HPP_

#include <chrono>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lagrangian/activity.hpp"
#include "lagrangian/chow.hpp"
#include "lagrangian/conormal.hpp"
#include "lagrangian/oracle.hpp"
#include "lagrangian/report.hpp"
#include "test_support.hpp"

namespace lagrangian::acceptance {

using Seq = std::vector<std::int64_t>;
using testing::S;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::string seconds_text(double s) {
  std::ostringstream out;
  out.precision(3);
  out << s << " s";
  return out.str();
}

inline std::string seq(const Seq& v) { return sequence_text(v); }

// 1. RBC f- and h-vectors of the pyramid and the cube, with time limits.
inline CrossCheckReport table_one() {
  CrossCheckReport r{"table-1", {}};
  struct Case {
    const char* name;
    const Matroid* m;
    Seq f, h;
    double limit;
  };
  const std::vector<Case> cases = {
      {"pyramid", &testing::pyramid(), {1, 7, 17, 14}, {1, 4, 6, 3}, 1.0},
      {"cube", &testing::cube(), {1, 11, 55, 159, 282, 290, 133},
       {1, 5, 15, 29, 40, 32, 11}, 30.0}};
  for (const Case& c : cases) {
    const Stopwatch clock;
    const BrokenCircuitVectors v = fh_vectors(*c.m);
    const double t = clock.seconds();
    r.record(std::string(c.name) + " f " + seq(v.rbc.f), v.rbc.f == c.f,
             "expected " + seq(c.f));
    r.record(std::string(c.name) + " h " + seq(v.rbc.h), v.rbc.h == c.h,
             "expected " + seq(c.h));
    r.record(std::string(c.name) + " time " + seconds_text(t), t < c.limit,
             "limit " + seconds_text(c.limit));
  }
  return r;
}

// 2. Pyramid census and the three top-degree monomials.
inline CrossCheckReport pyramid_census() {
  CrossCheckReport r{"census", {}};
  const Stopwatch clock;
  const Matroid& m = testing::pyramid();
  const DeltaExpansion d = canonical_delta_expansion(m, 6);
  const double t = clock.seconds();
  const Seq with{1, 29, 352, 658, 383, 69, 3};
  const Seq distinct{1, 29, 333, 621, 370, 68, 3};
  r.record("with multiplicity " + seq(d.census.with_multiplicity),
           d.census.with_multiplicity == with, "expected " + seq(with));
  r.record("distinct " + seq(d.census.distinct), d.census.distinct == distinct,
           "expected " + seq(distinct));
  std::vector<std::string> got;
  for (const ExpansionTable& x : d.tables) {
    got.push_back(monomial_text(x.monomial, m.ground()));
  }
  std::sort(got.begin(), got.end());
  std::vector<std::string> expected = {
      "x_{6|E}x_{56|E}x_{4567|E}x_{E|23467}x_{E|347}x_{E|7}",
      "x_{7|E}x_{57|E}x_{4567|E}x_{E|23467}x_{E|36}x_{E|6}",
      "x_{7|E}x_{67|E}x_{4567|E}x_{E|235}x_{E|35}x_{E|5}"};
  std::sort(expected.begin(), expected.end());
  std::string listing;
  for (const auto& s : got) listing += s + " ";
  r.record("delta^6 monomials", got == expected, "got " + listing);
  r.record("time " + seconds_text(t), t < 5.0, "limit 5 s");
  return r;
}

// 3. Bijective form of the top-degree identity, every k.
inline CrossCheckReport bijective_verification() {
  CrossCheckReport r{"bijection", {}};
  struct Case {
    const char* name;
    const Matroid* m;
    Seq counts;
    double limit;
  };
  const std::vector<Case> cases = {
      {"pyramid", &testing::pyramid(), {3, 6, 4, 1}, 60.0},
      {"cube", &testing::cube(), {11, 32, 40, 29, 15, 5, 1}, 600.0}};
  for (const Case& c : cases) {
    const Stopwatch clock;
    const ChowEngine engine(*c.m);
    std::vector<int> ks(engine.r() + 1);
    std::iota(ks.begin(), ks.end(), 0);
    const auto checks = verify_theorem(engine, ks);
    const double t = clock.seconds();
    Seq counts;
    bool bijective = true;
    for (const TheoremCheck& check : checks) {
      counts.push_back(check.theorem_path.sum.total());
      bijective &= check.bijective && check.counts_match;
    }
    const Census& census = checks.front().theorem_path.census;
    std::ostringstream label;
    label << c.name << " counts " << seq(counts) << ", tables "
          << seq(census.with_multiplicity) << ", peak pending "
          << census.peak_frontier;
    r.record(label.str(), counts == c.counts, "expected " + seq(c.counts));
    r.record(std::string(c.name) + " bijective, multiplicity one", bijective,
             "theorem path differs from the extended nbc monomials");
    r.record(std::string(c.name) + " time " + seconds_text(t), t < c.limit,
             "limit " + seconds_text(c.limit));
  }
  return r;
}

inline std::vector<Matroid> random_graphic_matroids(int count, int elements,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Matroid> out;
  for (int i = 0; i < count; ++i) {
    const int vertices = 3 + static_cast<int>(rng() % 4);  // 3..6
    out.push_back(
        Matroid::from_graph(testing::random_bridgeless_graph(rng, vertices, elements)));
  }
  return out;
}

// 4. Tutte coefficients, f-to-h and expansion counts agree.
inline CrossCheckReport triple_agreement() {
  CrossCheckReport r{"h-triple", {}};
  std::vector<std::pair<std::string, const Matroid*>> named = {
      {"pyramid", &testing::pyramid()},
      {"cube", &testing::cube()},
      {"u24", &testing::u24()},
      {"triangle", &testing::triangle()}};
  const std::vector<Matroid> random = random_graphic_matroids(20, 8, 0xC0FFEE);
  for (std::size_t i = 0; i < random.size(); ++i) {
    named.push_back({"random-" + std::to_string(i), &random[i]});
  }
  for (const auto& [name, m] : named) {
    const CrossCheckReport one = hvector_triple_check(*m, name);
    std::string detail;
    for (const auto& c : one.checks) {
      if (!c.passed) detail += c.counterexample + "; ";
    }
    r.record(name, one.passed(), detail);
  }
  return r;
}

// 5. The worked cube basis 015678b.
inline CrossCheckReport cube_golden() {
  CrossCheckReport r{"cube-golden", {}};
  const Matroid& m = testing::cube();
  const ESet ground = m.ground();
  const ESet basis = S("015678b");
  const ActivityRecord rec = activities(m, basis);
  r.record("IA = 016", rec.internally_active == S("016") &&
                           rec.externally_active.empty(),
           to_string(rec.internally_active));
  const NbcBiflag nbc = nbc_biflag(m, basis);
  r.record("arrivals (b,8,7,5;3,4,9,a)",
           nbc.arrivals == std::vector<Element>{11, 8, 7, 5, 3, 4, 9, 10});
  const std::string chain = monomial_text(nbc.biflag, ground);
  r.record("nbc chain " + chain,
           chain == "x_{b|E}x_{8b|E}x_{78b|E}x_{578b|E}x_{E|03469a}x_{E|469a}"
                    "x_{E|69a}x_{E|a}");
  const ExtendedNbcBiflag ext = extended_nbc_biflag(m, basis);
  r.record("switch index 2", ext.switch_index == 2,
           std::to_string(ext.switch_index));
  const bool inserted =
      ext.inserted.size() == 2 &&
      ext.inserted[0] == Biflat{S("5678b"), ground} &&
      ext.inserted[1] == Biflat{S("1256789ab"), S("03469a")};
  r.record("inserted 5678b|E and 1256789ab|03469a", inserted);
  const ChowEngine engine(m);
  const auto cert = engine.resistant_filter({nbc.biflag, nbc.arrivals}, 2);
  r.record("resistant with S=578b, P(S)=016",
           cert && cert->basis == basis && cert->completion == S("016") &&
               cert->independent_part == S("578b"));
  r.record("gamma_6 gamma_1 gives the extended monomial",
           cert && engine.multiply_resistant(nbc.biflag, *cert, 2) == ext.biflag);
  return r;
}

// 6. Property suites.
inline CrossCheckReport properties() {
  CrossCheckReport r{"properties", {}};
  const std::vector<std::pair<std::string, const Matroid*>> corpus = {
      {"pyramid", &testing::pyramid()},
      {"cube", &testing::cube()},
      {"u24", &testing::u24()},
      {"triangle", &testing::triangle()}};

  {  // Big unions.
    std::string bad;
    for (const auto& [name, m] : corpus) {
      for (ESet f : all_flats(*m)) {
        for (ESet g : all_flats(DualView<Matroid>(*m))) {
          if (!f.empty() && !g.empty() && (f | g).size() == m->size() - 1 &&
              bad.empty()) {
            bad = name + " " + to_string(f) + "|" + to_string(g);
          }
        }
      }
    }
    r.record("big unions", bad.empty(), bad);
  }

  {  // Gaps, double jumps and maximal length over every biflag met.
    std::string bad;
    std::int64_t seen = 0;
    auto check = [&](const Matroid& m, const Biflag& b, const std::string& where) {
      ++seen;
      const GapJumpData g = gap_jump(m, b);
      ESet acc;
      bool ok = !g.double_jumps.empty();
      for (std::size_t j = 0; j < g.gaps.size(); ++j) {
        ok &= !acc.intersects(g.gaps[j]);
        acc |= g.gaps[j];
        if (!g.gaps[j].empty()) {
          ok &= g.gaps[j].size() >= 2 &&
                std::count(g.double_jumps.begin(), g.double_jumps.end(),
                           static_cast<int>(j)) == 1;
        }
      }
      ok &= acc == m.ground() - b.covered();
      if (!ok && bad.empty()) bad = where + " " + monomial_text(b, m.ground());
    };
    for (const auto& [name, m] : corpus) {
      const ChowEngine engine(*m);
      if (m->size() <= 8) {
        walk_delta_expansion(engine, engine.n() - 1,
                             [&](const ExpansionTable& t, int) {
                               if (!t.monomial.empty()) check(*m, t.monomial, name);
                             });
      }
      for (const ActivityRecord& rec : nbc_bases(*m)) {
        check(*m, nbc_biflag(*m, rec.basis).biflag, name);
        check(*m, extended_nbc_biflag(*m, rec.basis).biflag, name);
      }
    }
    r.record("gaps partition the uncovered set (" + std::to_string(seen) +
                 " biflags)",
             bad.empty(), bad);
  }

  {  // Maximal biflags have length n-1.
    std::string bad;
    std::mt19937_64 rng(99);
    for (const auto& [name, m] : corpus) {
      std::vector<Biflat> biflats;
      for (ESet f : all_flats(*m)) {
        for (ESet g : all_flats(DualView<Matroid>(*m))) {
          if (is_biflat(*m, f, g)) biflats.push_back({f, g});
        }
      }
      for (int trial = 0; trial < 25; ++trial) {
        std::vector<Biflat> pick;
        for (int t = 0; t < 4; ++t) {
          auto next = pick;
          const Biflat& x = biflats[rng() % biflats.size()];
          if (std::find(next.begin(), next.end(), x) != next.end()) continue;
          next.push_back(x);
          if (is_biflag(*m, next)) pick = next;
        }
        const Biflag full = extend_to_maximal(*m, Biflag(pick));
        bool maximal = full.length() == m->size() - 2;
        for (const Biflat& x : biflats) {
          auto more = full.chain();
          if (std::find(more.begin(), more.end(), x) != more.end()) continue;
          more.push_back(x);
          maximal &= !is_biflag(*m, more);
        }
        if (!maximal && bad.empty()) bad = name;
      }
    }
    r.record("maximal biflags have length n-1", bad.empty(), bad);
  }

  {  // P(S) three ways, and the basis decomposition over the pyramid.
    std::string bad;
    std::int64_t sets = 0;
    for (const auto& [name, m] : corpus) {
      const std::vector<ESet> bases = all_bases(*m);
      for_each_subset(m->ground(), [&](ESet s) {
        if (!is_independent(*m, s)) return;
        ++sets;
        const ESet p = greedy_completion(*m, s);
        if ((p != completion_by_cocircuits(*m, s) ||
             p != completion_by_closure(*m, s)) &&
            bad.empty()) {
          bad = name + " P(" + to_string(s) + ")";
        }
        if (name != "pyramid") return;
        const ESet b = s | p;
        ESet lex_min;
        bool first = true;
        for (ESet c : bases) {
          if (s.subset_of(c) && (first || lex_less(c, lex_min))) {
            lex_min = c;
            first = false;
          }
        }
        const ActivityRecord rb = activities(*m, b);
        const SetActivities rs = set_activities(*m, s);
        if ((b != lex_min ||
             rb.internally_active != (rs.internally_active | p) ||
             rb.externally_active != rs.externally_active) &&
            bad.empty()) {
          bad = "decomposition of " + to_string(s);
        }
      });
    }
    r.record("P(S) characterizations and basis decomposition (" +
                 std::to_string(sets) + " independent sets)",
             bad.empty(), bad);
  }

  {  // Step lemmas against brute force on instances of at most 8 elements.
    const Matroid chorded = Matroid::from_graph(
        {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 0}, {4, 0, 2}});
    std::string bad;
    for (const auto& [name, m] :
         std::vector<std::pair<std::string, const Matroid*>>{
             {"pyramid", &testing::pyramid()},
             {"u24", &testing::u24()},
             {"triangle", &testing::triangle()},
             {"chorded 4-cycle", &chorded}}) {
      const CrossCheckReport one = step_lemma_bruteforce(*m, name);
      if (!one.passed() && bad.empty()) bad = one.render();
    }
    r.record("step lemmas match brute force", bad.empty(), bad);
  }

  {  // Pivot policy and pruning on the pyramid.
    const ChowEngine engine(testing::pyramid());
    bool policy = true, pruning = true;
    for (int k = 0; k <= engine.r(); ++k) {
      const auto lo = gamma_delta_power(engine, k, Strategy::kExhaustive,
                                        {GammaPivot::kMin, true});
      const auto hi = gamma_delta_power(engine, k, Strategy::kExhaustive,
                                        {GammaPivot::kMax, true});
      const auto raw = gamma_delta_power(engine, k, Strategy::kExhaustive,
                                         {GammaPivot::kMin, false});
      policy &= lo.sum.total() == hi.sum.total();
      pruning &= lo.sum == raw.sum;
    }
    r.record("pivot policy leaves counts unchanged", policy);
    r.record("eradicates pruning leaves results unchanged", pruning);
  }

  {  // Log-concavity of corpus f- and h-vectors.
    std::string bad;
    for (const auto& [name, m] : corpus) {
      const BrokenCircuitVectors v = fh_vectors(*m);
      for (const Seq* s : {&v.bc.f, &v.bc.h, &v.rbc.f, &v.rbc.h}) {
        if (!logconcavity_check(*s) && bad.empty()) bad = name + " " + seq(*s);
      }
    }
    r.record("log-concave f and h", bad.empty(), bad);
  }
  return r;
}

}  // namespace lagrangian::acceptance

#endif  // LAGRANGIAN_TESTS_ACCEPTANCE_CHECKS_HPP_
