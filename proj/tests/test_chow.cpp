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

#include <gtest/gtest.h>

#include <iostream>
#include <set>

#include "lagrangian/activity.hpp"
#include "lagrangian/chow.hpp"
#include "lagrangian/conormal.hpp"
#include "test_support.hpp"

namespace lagrangian {
namespace {

using testing::cube;
using testing::pyramid;
using testing::S;
using testing::u24;

using Seq = std::vector<std::int64_t>;

Biflat bf(const Matroid& m, const std::string& f, const std::string& g) {
  return {S(f, m.ground()), S(g, m.ground())};
}

Biflag chain(const Matroid& m,
             std::vector<std::pair<std::string, std::string>> cols) {
  std::vector<Biflat> out;
  for (const auto& [f, g] : cols) out.push_back(bf(m, f, g));
  return Biflag(out);
}

const ChowEngine& pyramid_engine() {
  static const ChowEngine e(pyramid());
  return e;
}
const ChowEngine& cube_engine() {
  static const ChowEngine e(cube());
  return e;
}

TEST(ChowTest, RejectsLoopsAndColoops) {
  const Matroid bridges = Matroid::from_graph({{0, 0, 1}, {1, 1, 2}});
  const Matroid loop = Matroid::from_bases(3, {ESet{0, 1}});
  EXPECT_THROW(ChowEngine{bridges}, PreconditionError);
  EXPECT_THROW(ChowEngine{loop}, PreconditionError);
}

TEST(ChowTest, PivotExamples) {
  const Matroid& m = pyramid();
  const ChowEngine& e = pyramid_engine();
  EXPECT_EQ(e.pivot(Biflag()), 7);
  EXPECT_EQ(e.pivot(chain(m, {{"E", "7"}})), 6);
  EXPECT_EQ(e.pivot(chain(m, {{"6", "E"}, {"E", "7"}})), 5);
}

TEST(ChowTest, FirstDeltaStep) {
  const auto first = pyramid_engine().delta_step(ExpansionTable{});
  EXPECT_EQ(first.size(), 29u);
  for (const auto& t : first) {
    EXPECT_EQ(t.arrivals, std::vector<Element>{7});
    EXPECT_TRUE((t.monomial[0].flat & t.monomial[0].coflat).contains(7));
  }
  const Biflag e7 = chain(pyramid(), {{"E", "7"}});
  EXPECT_NE(std::find_if(first.begin(), first.end(),
                         [&](const ExpansionTable& t) {
                           return t.monomial == e7;
                         }),
            first.end());
}

TEST(ChowTest, PyramidCensus) {
  const DeltaExpansion d = canonical_delta_expansion(pyramid_engine(), 6);
  EXPECT_EQ(d.census.with_multiplicity, (Seq{1, 29, 352, 658, 383, 69, 3}));
  EXPECT_EQ(d.census.distinct, (Seq{1, 29, 333, 621, 370, 68, 3}));
  EXPECT_EQ(d.census.peak_frontier, 658);
}

TEST(ChowTest, PyramidTopPower) {
  const Matroid& m = pyramid();
  const DeltaExpansion d = canonical_delta_expansion(pyramid_engine(), 6);
  ASSERT_EQ(d.tables.size(), 3u);
  const std::vector<Biflag> expected = {
      chain(m, {{"6", "E"}, {"56", "E"}, {"4567", "E"}, {"E", "23467"},
                {"E", "347"}, {"E", "7"}}),
      chain(m, {{"7", "E"}, {"57", "E"}, {"4567", "E"}, {"E", "23467"},
                {"E", "36"}, {"E", "6"}}),
      chain(m, {{"7", "E"}, {"67", "E"}, {"4567", "E"}, {"E", "235"},
                {"E", "35"}, {"E", "5"}}),
  };
  std::vector<Biflag> got;
  for (const auto& t : d.tables) got.push_back(t.monomial);
  EXPECT_EQ(std::set<Biflag>(got.begin(), got.end()),
            std::set<Biflag>(expected.begin(), expected.end()));
}

TEST(ChowTest, ExpansionEdgeCases) {
  const DeltaExpansion zero = canonical_delta_expansion(pyramid_engine(), 0);
  ASSERT_EQ(zero.tables.size(), 1u);
  EXPECT_TRUE(zero.tables[0].monomial.empty());
  EXPECT_THROW(canonical_delta_expansion(pyramid_engine(), 7), std::out_of_range);
  EXPECT_THROW(canonical_delta_expansion(pyramid_engine(), -1), std::out_of_range);
  // Some product with δ vanishes on the way from δ^5 to δ^6.
  const DeltaExpansion five = canonical_delta_expansion(pyramid_engine(), 5);
  int zeros = 0;
  for (const auto& t : five.tables) zeros += pyramid_engine().delta_step(t).empty();
  EXPECT_GT(zeros, 0);
}

TEST(ChowTest, EveryTableSatisfiesTheArrivalConditions) {
  for (const ChowEngine* e : {&pyramid_engine(), &cube_engine()}) {
    std::int64_t bad = 0;
    walk_delta_expansion(*e, e->n() - 1, [&](const ExpansionTable& t, int) {
      if (expansion_violation(e->matroid(), t)) ++bad;
    });
    EXPECT_EQ(bad, 0);
  }
}

TEST(ChowTest, GammaStepExample) {
  const Matroid& m = cube();
  const ChowEngine& e = cube_engine();
  const NbcBiflag nbc = nbc_biflag(m, S("015678b"));
  const ExtendedNbcBiflag ext = extended_nbc_biflag(m, S("015678b"));
  // γ_6 then γ_1, keeping what the last γ does not eradicate.
  std::vector<Biflag> after;
  for (const Biflag& y : e.gamma_step(nbc.biflag, 6)) {
    if (e.eradicates(y, 1)) continue;
    for (const Biflag& z : e.gamma_step(y, 1)) after.push_back(z);
  }
  ASSERT_EQ(after.size(), 1u);
  EXPECT_EQ(after[0], ext.biflag);
  const auto cert = e.resistant_filter({nbc.biflag, nbc.arrivals}, 2);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(e.multiply_resistant(nbc.biflag, *cert, 2), ext.biflag);
  EXPECT_THROW(e.gamma_step(nbc.biflag, 5), PreconditionError);
}

TEST(ChowTest, GammaStepOnFullFlag) {
  const Matroid& m = pyramid();
  const Biflag x = nbc_biflag(m, S("0456")).biflag;  // flat ranks 1, 2, 3
  for (Element c : S("0123")) {
    EXPECT_TRUE(pyramid_engine().gamma_step(x, c).empty());
  }
}

TEST(ChowTest, EradicatesAndInitial) {
  const Matroid& m = pyramid();
  const ChowEngine& e = pyramid_engine();
  const Biflag x = nbc_biflag(m, S("0456")).biflag;
  EXPECT_FALSE(e.eradicates(x, 0));
  EXPECT_TRUE(e.is_initial(x));
  EXPECT_TRUE(e.eradicates(x, 1));  // s = r
  EXPECT_FALSE(e.is_initial(chain(m, {{"01256", "1347"}})));
  EXPECT_TRUE(e.is_initial(Biflag()));

  // A δ^4 table with one proper flat of rank > 1 at s + k = r.
  int found = 0;
  const DeltaExpansion four = canonical_delta_expansion(e, 4);
  for (const auto& t : four.tables) {
    if (e.distinct_proper_flats(t.monomial) != 1 || e.is_initial(t.monomial)) {
      continue;
    }
    ++found;
    EXPECT_TRUE(e.eradicates(t.monomial, 2));
    MonomialSum sum;
    e.multiply_gamma_power(t.monomial, 2, GammaPivot::kMin, false, sum);
    EXPECT_EQ(sum.total(), 0);
  }
  EXPECT_GT(found, 0);
}

TEST(ChowTest, ResistantFilterExamples) {
  const Matroid& m = pyramid();
  const ChowEngine& e = pyramid_engine();
  const DeltaExpansion six = canonical_delta_expansion(e, 6);
  std::vector<ESet> bases;
  for (const auto& t : six.tables) {
    const auto cert = e.resistant_filter(t, 0);
    ASSERT_TRUE(cert.has_value());
    bases.push_back(cert->basis);
  }
  std::sort(bases.begin(), bases.end());
  EXPECT_EQ(bases, (std::vector<ESet>{S("0456"), S("0457"), S("0467")}));

  const NbcBiflag nbc = nbc_biflag(cube(), S("015678b"));
  const auto cert = cube_engine().resistant_filter({nbc.biflag, nbc.arrivals}, 2);
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->basis, S("015678b"));
  EXPECT_EQ(cert->completion, S("016"));
  EXPECT_EQ(cert->independent_part, S("578b"));
  // Wrong k or wrong length.
  EXPECT_FALSE(cube_engine().resistant_filter({nbc.biflag, nbc.arrivals}, 1));

  // A rejected δ^5 table whose γ-expansion is empty.
  const DeltaExpansion five = canonical_delta_expansion(e, 5);
  int rejected = 0;
  for (const auto& t : five.tables) {
    if (e.resistant_filter(t, 1)) continue;
    const GapJumpData g = gap_jump(m, t.monomial);
    if (g.double_jumps == std::vector<int>{e.r() - 1}) continue;
    ++rejected;
    MonomialSum sum;
    e.multiply_gamma_power(t.monomial, 1, GammaPivot::kMin, false, sum);
    EXPECT_EQ(sum.total(), 0);
  }
  EXPECT_GT(rejected, 0);
}

// The filter accepts a table exactly when its product with γ^k is nonzero.
TEST(ChowTest, FilterMatchesNonvanishing) {
  for (const ChowEngine* e : {&pyramid_engine(), &cube_engine()}) {
    for (int k = 0; k <= e->r(); ++k) {
      std::int64_t mismatches = 0;
      const int power = e->n() - k - 1;
      walk_delta_expansion(*e, power, [&](const ExpansionTable& t, int p) {
        if (p != power) return;
        MonomialSum sum;
        e->multiply_gamma_power(t.monomial, k, GammaPivot::kMin, true, sum);
        const bool accepted = e->resistant_filter(t, k).has_value();
        if (accepted != (sum.total() > 0)) ++mismatches;
        if (accepted && sum.total() != 1) ++mismatches;
      });
      EXPECT_EQ(mismatches, 0) << "k=" << k;
    }
  }
}

TEST(ChowTest, ResistantTableStructure) {
  for (const ChowEngine* e : {&pyramid_engine(), &cube_engine()}) {
    for (int k = 0; k <= e->r(); ++k) {
      const int power = e->n() - k - 1;
      std::set<Biflag> seen;
      std::int64_t accepted = 0;
      walk_delta_expansion(*e, power, [&](const ExpansionTable& t, int p) {
        if (p != power) return;
        const auto cert = e->resistant_filter(t, k);
        if (!cert) return;
        ++accepted;
        seen.insert(t.monomial);
        const auto problems = resistant_violations(*e, t, *cert, k);
        EXPECT_TRUE(problems.empty())
            << problems.front() << "\n"
            << render_table(e->matroid(), t.monomial, t.arrivals);
      });
      EXPECT_EQ(static_cast<std::int64_t>(seen.size()), accepted);
    }
  }
}

TEST(ChowTest, GammaDeltaPowers) {
  const Seq pyramid_counts{3, 6, 4, 1};
  for (int k = 0; k <= 3; ++k) {
    for (Strategy s : {Strategy::kTheoremPath, Strategy::kExhaustive}) {
      EXPECT_EQ(gamma_delta_power(pyramid_engine(), k, s).sum.total(),
                pyramid_counts[k]);
    }
  }
  const GammaDeltaResult cube2 =
      gamma_delta_power(cube_engine(), 2, Strategy::kTheoremPath);
  EXPECT_EQ(cube2.sum.total(), 40);
  EXPECT_EQ(cube2.sum.multiplicity(extended_nbc_biflag(cube(), S("015678b")).biflag), 1);
  EXPECT_THROW(gamma_delta_power(pyramid_engine(), 4, Strategy::kExhaustive),
               std::out_of_range);
}

TEST(ChowTest, Degree) {
  const Matroid& m = pyramid();
  MonomialSum one;
  one.add(extended_nbc_biflag(m, S("0123")).biflag);
  EXPECT_EQ(degree(m, one), 1);
  // Six pairwise incompatible biflats.
  MonomialSum junk;
  junk.add(Biflag({bf(m, "0", "E"), bf(m, "1", "E"), bf(m, "2", "E"),
                   bf(m, "3", "E"), bf(m, "5", "E"), bf(m, "6", "E")}));
  EXPECT_EQ(degree(m, junk), 0);
  EXPECT_EQ(degree(m, gamma_delta_power(pyramid_engine(), 1,
                                        Strategy::kExhaustive).sum),
            6);
  MonomialSum short_one;
  short_one.add(chain(m, {{"E", "7"}}));
  EXPECT_THROW(degree(m, short_one), PreconditionError);
}

TEST(ChowTest, PivotPolicyDoesNotChangeCounts) {
  for (const ChowEngine* e : {&pyramid_engine(), &cube_engine()}) {
    for (int k = 0; k <= e->r(); ++k) {
      const auto lo = gamma_delta_power(*e, k, Strategy::kExhaustive,
                                        {GammaPivot::kMin, true});
      const auto hi = gamma_delta_power(*e, k, Strategy::kExhaustive,
                                        {GammaPivot::kMax, true});
      EXPECT_EQ(lo.sum.total(), hi.sum.total()) << "k=" << k;
      EXPECT_EQ(degree(e->matroid(), lo.sum), lo.sum.total());
    }
  }
}

TEST(ChowTest, PruningDoesNotChangeResults) {
  for (int k = 0; k <= 3; ++k) {
    for (GammaPivot p : {GammaPivot::kMin, GammaPivot::kMax}) {
      const auto pruned =
          gamma_delta_power(pyramid_engine(), k, Strategy::kExhaustive, {p, true});
      const auto full =
          gamma_delta_power(pyramid_engine(), k, Strategy::kExhaustive, {p, false});
      EXPECT_EQ(pruned.sum, full.sum) << "k=" << k;
    }
  }
}

// Not an invariant: whether an arbitrary γ pivot policy lands on exactly the
// extended nbc monomials. Reported for information only.
TEST(ChowTest, ExhaustiveSetDiagnostic) {
  for (const ChowEngine* e : {&pyramid_engine(), &cube_engine()}) {
    for (GammaPivot p : {GammaPivot::kMin, GammaPivot::kMax}) {
      int equal = 0;
      for (int k = 0; k <= e->r(); ++k) {
        const auto ex = gamma_delta_power(*e, k, Strategy::kExhaustive, {p, true});
        equal += ex.sum == extended_nbc_sum(e->matroid(), k);
      }
      std::cout << "[diagnostic] n+1=" << e->matroid().size() << " policy "
                << (p == GammaPivot::kMin ? "min" : "max") << ": " << equal
                << " of " << e->r() + 1
                << " powers give exactly the extended nbc monomials\n";
    }
  }
}

TEST(ChowTest, VerifyTheorem) {
  for (const ChowEngine* e : {&pyramid_engine(), &cube_engine()}) {
    std::vector<int> ks;
    for (int k = 0; k <= e->r(); ++k) ks.push_back(k);
    for (const TheoremCheck& c : verify_theorem(*e, ks)) {
      EXPECT_TRUE(c.passed()) << "k=" << c.k;
      EXPECT_EQ(c.theorem_path.resistant_tables, c.expected);
    }
  }
}

TEST(ChowTest, BigUnionsTwo) {
  for (const Matroid* m : {&pyramid(), &cube()}) {
    const DualView<Matroid> dual(*m);
    std::vector<ESet> hyperplanes;
    for (ESet g : all_flats(dual)) {
      if (dual.rank(g) == dual.full_rank() - 1) hyperplanes.push_back(g);
    }
    for_each_subset(m->ground(), [&](ESet s) {
      if (!is_independent(*m, s)) return;
      const ESet f = closure(*m, s);
      const ESet p = greedy_completion(*m, s);
      for (ESet g : hyperplanes) {
        if ((f | g) != m->ground()) {
          ASSERT_NE(f | g | p, m->ground()) << to_string(s) << " " << to_string(g);
        }
      }
    });
  }
}

TEST(ChowTest, SmallMatroids) {
  const ChowEngine e(u24());
  std::vector<int> ks{0, 1};
  for (const TheoremCheck& c : verify_theorem(e, ks)) {
    EXPECT_TRUE(c.passed()) << "k=" << c.k;
  }
}

}  // namespace
}  // namespace lagrangian
