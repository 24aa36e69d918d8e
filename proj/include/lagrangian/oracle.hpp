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

// Brute-force cross-checks for small instances. These deliberately avoid the
// closure, flat lattice and biflag helpers of the main library: flats are
// found by testing every subset against the rank function, biflags by
// checking every pair, and graph activities by listing every cycle and bond.

#ifndef LAGRANGIAN_ORACLE_HPP_
#define LAGRANGIAN_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lagrangian/activity.hpp"
#include "lagrangian/chow.hpp"
#include "lagrangian/eset.hpp"
#include "lagrangian/matroid.hpp"

namespace lagrangian {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string counterexample;  // empty when passed
};

struct CrossCheckReport {
  std::string instance;
  std::vector<CheckResult> checks;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
  }
  void record(std::string name, bool ok, std::string counterexample = {}) {
    checks.push_back({std::move(name), ok, ok ? std::string() : std::move(counterexample)});
  }
  std::string render() const {
    std::ostringstream out;
    for (const CheckResult& c : checks) {
      out << instance << " " << c.name << ": " << (c.passed ? "pass" : "FAIL");
      if (!c.passed) out << " [" << c.counterexample << "]";
      out << "\n";
    }
    return out.str();
  }
};

/// Refuses scans over more than 2^16 subsets.
inline void require_small(int elements, int limit = 16) {
  if (elements > limit) {
    throw PreconditionError("oracle instance too large: " +
                            std::to_string(elements) + " elements");
  }
}

/// h_{r-k}(BC) for every k, three ways: Tutte coefficients t_{k+1,0}, the
/// f-to-h transform of the broken circuit complex, and the number of terms
/// of γ^k δ^{n-k-1} (both pipelines).
inline CrossCheckReport hvector_triple_check(const Matroid& m,
                                             const std::string& instance) {
  CrossCheckReport report{instance, {}};
  const ChowEngine engine(m);
  const TuttePolynomial t = tutte(m);
  const BrokenCircuitVectors v = fh_vectors(m);
  std::vector<int> ks(engine.r() + 1);
  std::iota(ks.begin(), ks.end(), 0);
  const std::vector<TheoremCheck> checks = verify_theorem(engine, ks);
  for (const TheoremCheck& c : checks) {
    const std::int64_t a = t.coefficient(c.k + 1, 0);
    const std::int64_t b = v.bc.h[engine.r() - c.k];
    const std::int64_t rb = v.rbc.h[engine.r() - c.k];
    const std::int64_t theorem = c.theorem_path.sum.total();
    const std::int64_t exhaustive = c.exhaustive.sum.total();
    std::ostringstream detail;
    detail << "k=" << c.k << " tutte=" << a << " bc=" << b << " rbc=" << rb
           << " theorem=" << theorem << " exhaustive=" << exhaustive;
    report.record("h-triple k=" + std::to_string(c.k),
                  a == b && b == rb && b == theorem && b == exhaustive,
                  detail.str());
  }
  return report;
}

namespace oracle_detail {

inline bool flat_by_rank(const auto& m, ESet s) {
  const int r = m.rank(s);
  for (Element e : m.ground() - s) {
    if (m.rank(s.with(e)) == r) return false;
  }
  return true;
}

struct RawBiflat {
  ESet f, g;
  auto operator<=>(const RawBiflat&) const = default;
};
using RawBiflag = std::set<RawBiflat>;

inline bool raw_compatible(const RawBiflat& a, const RawBiflat& b) {
  return (a.f.subset_of(b.f) && b.g.subset_of(a.g)) ||
         (b.f.subset_of(a.f) && a.g.subset_of(b.g));
}

inline bool raw_is_biflag(const RawBiflag& x, ESet ground) {
  ESet covered;
  for (auto i = x.begin(); i != x.end(); ++i) {
    for (auto j = x.begin(); j != i; ++j) {
      if (!raw_compatible(*i, *j)) return false;
    }
    covered |= i->f & i->g;
  }
  return covered != ground;
}

inline RawBiflag raw(const Monomial& x) {
  RawBiflag out;
  for (const Biflat& b : x.chain()) out.insert({b.flat, b.coflat});
  return out;
}

inline std::string render_raw(const RawBiflag& x, ESet ground) {
  std::string s;
  for (const RawBiflat& b : x) {
    s += "x_{" + to_string(b.f, ground) + "|" + to_string(b.g, ground) + "}";
  }
  return s.empty() ? "1" : s;
}

}  // namespace oracle_detail

/// Compares the interval enumeration of delta_step and gamma_step with a
/// filter over every biflat of M, on every table of δ^0, ..., δ^max_power.
inline CrossCheckReport step_lemma_bruteforce(const Matroid& m,
                                              const std::string& instance,
                                              int max_power = -1) {
  using namespace oracle_detail;
  require_small(m.size(), 8);
  CrossCheckReport report{instance, {}};
  const ChowEngine engine(m);
  if (max_power < 0) max_power = engine.n() - 1;
  const ESet ground = m.ground();
  const DualView<Matroid> dual(m);

  std::vector<RawBiflat> biflats;
  std::vector<ESet> flats, coflats;
  for_each_subset(ground, [&](ESet s) {
    if (s.empty()) return;
    if (flat_by_rank(m, s)) flats.push_back(s);
    if (flat_by_rank(dual, s)) coflats.push_back(s);
  });
  for (ESet f : flats) {
    for (ESet g : coflats) {
      if ((f | g) == ground && !(f == ground && g == ground)) {
        biflats.push_back({f, g});
      }
    }
  }

  auto extend = [&](const RawBiflag& x, auto&& keep) {
    std::set<RawBiflag> out;
    for (const RawBiflat& b : biflats) {
      if (x.count(b) || !keep(b)) continue;
      RawBiflag y = x;
      y.insert(b);
      if (raw_is_biflag(y, ground)) out.insert(std::move(y));
    }
    return out;
  };

  std::int64_t delta_checked = 0, gamma_checked = 0;
  std::string delta_bad, gamma_bad;
  std::vector<ExpansionTable> frontier{ExpansionTable{}};
  for (int p = 0; p <= max_power && delta_bad.empty(); ++p) {
    std::vector<ExpansionTable> next;
    for (const ExpansionTable& t : frontier) {
      const RawBiflag x = raw(t.monomial);
      ESet covered;
      for (const RawBiflat& b : x) covered |= b.f & b.g;

      // Gamma, for every admissible pivot c.
      ESet top;
      for (const RawBiflat& b : x) {
        if (b.f != ground) top |= b.f;
      }
      for (Element c : ground - top) {
        const auto brute = extend(x, [&](const RawBiflat& b) {
          return b.f.contains(c) && b.f != ground;
        });
        std::set<RawBiflag> fast;
        for (const Monomial& y : engine.gamma_step(t.monomial, c)) {
          fast.insert(raw(y));
        }
        ++gamma_checked;
        if (brute != fast && gamma_bad.empty()) {
          gamma_bad = render_raw(x, ground) + " * gamma_" + element_label(c);
        }
      }
      if (p == max_power) continue;

      const Element e = (ground - covered).max();
      const auto brute = extend(x, [&](const RawBiflat& b) {
        return b.f.contains(e) && b.g.contains(e);
      });
      std::vector<ExpansionTable> children = engine.delta_step(t);
      std::set<RawBiflag> fast;
      for (const ExpansionTable& c : children) fast.insert(raw(c.monomial));
      ++delta_checked;
      if ((brute != fast || fast.size() != children.size()) &&
          delta_bad.empty()) {
        delta_bad = render_raw(x, ground) + " * delta_" + element_label(e);
      }
      for (auto& c : children) next.push_back(std::move(c));
    }
    frontier = std::move(next);
  }
  report.record("delta step (" + std::to_string(delta_checked) + " tables)",
                delta_bad.empty(), delta_bad);
  report.record("gamma step (" + std::to_string(gamma_checked) + " products)",
                gamma_bad.empty(), gamma_bad);
  return report;
}

/// h_i^2 >= h_{i-1} h_{i+1} on the support (the first to the last nonzero
/// entry), and no internal zeros.
inline bool logconcavity_check(const std::vector<std::int64_t>& seq) {
  std::size_t lo = 0, hi = seq.size();
  while (lo < hi && seq[lo] == 0) ++lo;
  while (hi > lo && seq[hi - 1] == 0) --hi;
  for (std::size_t i = lo; i < hi; ++i) {
    if (seq[i] < 0) return false;
    if (seq[i] == 0) return false;
    if (i > lo && i + 1 < hi) {
      const __int128 lhs = static_cast<__int128>(seq[i]) * seq[i];
      const __int128 rhs = static_cast<__int128>(seq[i - 1]) * seq[i + 1];
      if (lhs < rhs) return false;
    }
  }
  return true;
}

namespace oracle_detail {

struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> ends;  // by label
};

inline Graph graph_of(const Matroid& m) {
  if (m.backend() != Matroid::Backend::kGraphic) {
    throw PreconditionError("activity oracle needs a graphic matroid");
  }
  std::map<int, int> index;
  for (const GraphEdge& e : m.edges()) {
    index.emplace(e.u, 0);
    index.emplace(e.v, 0);
  }
  Graph g;
  for (auto& [v, i] : index) i = g.vertices++;
  g.ends.resize(m.size());
  for (const GraphEdge& e : m.edges()) {
    g.ends[e.label] = {index[e.u], index[e.v]};
  }
  return g;
}

// Vertices reachable from `start` through `edges`.
inline std::uint64_t reach(const Graph& g, ESet edges, int start) {
  std::uint64_t seen = std::uint64_t{1} << start;
  bool grew = true;
  while (grew) {
    grew = false;
    for (Element e : edges) {
      const auto [u, v] = g.ends[e];
      const bool hu = seen >> u & 1, hv = seen >> v & 1;
      if (hu != hv) {
        seen |= (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        grew = true;
      }
    }
  }
  return seen;
}

// Edge sets forming a single cycle: every touched vertex has degree 2 and
// the edges are connected. Self-loops are cycles of length one.
inline std::vector<ESet> graph_cycles(const Graph& g, ESet ground) {
  std::vector<ESet> out;
  for_each_subset(ground, [&](ESet s) {
    if (s.empty()) return;
    if (s.size() == 1) {
      const auto [u, v] = g.ends[s.min()];
      if (u == v) out.push_back(s);
      return;
    }
    std::vector<int> degree(g.vertices, 0);
    for (Element e : s) {
      ++degree[g.ends[e].first];
      ++degree[g.ends[e].second];
    }
    for (int d : degree) {
      if (d != 0 && d != 2) return;
    }
    const std::uint64_t touched = reach(g, s, g.ends[s.min()].first);
    for (int v = 0; v < g.vertices; ++v) {
      if (degree[v] != 0 && !(touched >> v & 1)) return;
    }
    out.push_back(s);
  });
  return out;
}

// Minimal edge cuts of a connected graph: δ(X) with X ∋ 0 and both sides
// inducing connected subgraphs.
inline std::vector<ESet> graph_bonds(const Graph& g, ESet ground) {
  std::vector<ESet> out;
  const std::uint64_t all = (std::uint64_t{1} << g.vertices) - 1;
  for (std::uint64_t side = 1; side < all; side += 2) {
    ESet cut, inside, outside;
    for (Element e : ground) {
      const auto [u, v] = g.ends[e];
      const bool iu = side >> u & 1, iv = side >> v & 1;
      if (iu != iv) {
        cut.insert(e);
      } else if (iu) {
        inside.insert(e);
      } else {
        outside.insert(e);
      }
    }
    int other = 0;
    while (side >> other & 1) ++other;
    if (reach(g, inside, 0) != side) continue;
    if (reach(g, outside, other) != (all & ~side)) continue;
    out.push_back(cut);
  }
  return out;
}

}  // namespace oracle_detail

/// Activities of a spanning tree from explicit cycle and bond lists.
/// `cycles` and `bonds` may be passed in to amortize over many trees.
inline ActivityRecord activity_bruteforce(const Matroid& m, ESet tree,
                                          const std::vector<ESet>& cycles,
                                          const std::vector<ESet>& bonds) {
  ActivityRecord rec;
  rec.basis = tree;
  const ESet ground = m.ground();
  for (Element i : ground - tree) {
    for (ESet c : cycles) {
      if (c.contains(i) && c.subset_of(tree.with(i)) && c.min() == i) {
        rec.externally_active.insert(i);
      }
    }
  }
  const ESet outside = ground - tree;
  for (Element i : tree) {
    for (ESet b : bonds) {
      if (b.contains(i) && b.subset_of(outside.with(i)) && b.min() == i) {
        rec.internally_active.insert(i);
      }
    }
  }
  rec.internally_passive = tree - rec.internally_active;
  rec.externally_passive = outside - rec.externally_active;
  return rec;
}

inline ActivityRecord activity_bruteforce(const Matroid& m, ESet tree) {
  using namespace oracle_detail;
  require_small(m.size());
  const Graph g = graph_of(m);
  return activity_bruteforce(m, tree, graph_cycles(g, m.ground()),
                             graph_bonds(g, m.ground()));
}

/// Compares activities(m, B) with the brute-force route for the given trees.
inline CrossCheckReport activity_crosscheck(const Matroid& m,
                                            const std::vector<ESet>& trees,
                                            const std::string& instance) {
  using namespace oracle_detail;
  require_small(m.size());
  CrossCheckReport report{instance, {}};
  const Graph g = graph_of(m);
  const std::vector<ESet> cycles = graph_cycles(g, m.ground());
  const std::vector<ESet> bonds = graph_bonds(g, m.ground());
  std::string bad;
  for (ESet tree : trees) {
    if (activity_bruteforce(m, tree, cycles, bonds) != activities(m, tree)) {
      bad = "tree " + to_string(tree);
      break;
    }
  }
  report.record("activities over " + std::to_string(trees.size()) + " trees",
                bad.empty(), bad);
  return report;
}

}  // namespace lagrangian

#endif  // LAGRANGIAN_ORACLE_HPP_
