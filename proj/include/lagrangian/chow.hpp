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

// Monomial expansions in the conormal Chow ring.
//
// The ring is never built. Products are carried out on square-free monomials
// x_{F|G} indexed by biflags, and any product that is not a biflag is dropped
// because it lies in the monomial ideal:
//
//   * x·δ is expanded as x·δ_e with e the largest element not covered by any
//     F_j ∩ G_j (the canonical expansion). The new biflat F|G contains e in
//     both parts and sits between positions j and j+1 of the chain, where
//     e ∈ F_{j+1} - F_j.
//   * x·γ is expanded as x·γ_c for some c outside the largest proper flat F_l.
//     The new biflat has F_l + c ⊆ F ⊊ E and G_l ⊇ G ⊇ G_{l+1}.
//
// γ^k δ^{n-k-1} is evaluated by expanding δ^{n-k-1} canonically and then
// multiplying every term by γ k times. Each surviving term is a maximal
// biflag, so the number of terms is the degree.

#ifndef LAGRANGIAN_CHOW_HPP_
#define LAGRANGIAN_CHOW_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lagrangian/activity.hpp"
#include "lagrangian/conormal.hpp"
#include "lagrangian/eset.hpp"
#include "lagrangian/matroid.hpp"

namespace lagrangian {

/// A square-free monomial x_{F|G}, identified with its set of biflats.
using Monomial = Biflag;

/// A term of a canonical δ-expansion: the monomial and its arrival sequence,
/// arrivals[i] being the pivot that introduced the biflat at chain position i.
struct ExpansionTable {
  Monomial monomial;
  std::vector<Element> arrivals;

  bool operator==(const ExpansionTable&) const = default;
  auto operator<=>(const ExpansionTable& o) const {
    if (auto c = monomial <=> o.monomial; c != 0) return c;
    return arrivals <=> o.arrivals;
  }
};

/// Nonnegative integer combination of monomials, canonically ordered.
class MonomialSum {
 public:
  void add(const Monomial& m, std::int64_t multiplicity = 1) {
    if (multiplicity <= 0) return;
    terms_[m] += multiplicity;
  }
  void merge(const MonomialSum& other) {
    for (const auto& [m, c] : other.terms_) terms_[m] += c;
  }
  std::int64_t total() const {
    std::int64_t t = 0;
    for (const auto& [m, c] : terms_) t += c;
    return t;
  }
  std::size_t distinct() const { return terms_.size(); }
  std::int64_t multiplicity(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }
  const std::map<Monomial, std::int64_t>& terms() const { return terms_; }
  bool operator==(const MonomialSum&) const = default;

 private:
  std::map<Monomial, std::int64_t> terms_;
};

struct Census {
  std::vector<std::int64_t> with_multiplicity;  // index = power
  std::vector<std::int64_t> distinct;           // empty when not tracked
  std::int64_t peak_frontier = 0;

  bool operator==(const Census&) const = default;
};

/// Witness that a table of δ^{n-k-1} is the nbc monomial of `basis`.
struct NbcCertificate {
  ESet basis;
  ESet internally_active;
  ESet independent_part;  // S = {e_1, ..., e_{r-k}}
  ESet completion;        // P(S)
};

enum class GammaPivot { kMin, kMax };
enum class Strategy { kTheoremPath, kExhaustive };

/// Flats of M and of its dual, bucketed by element for interval queries.
class FlatCatalog {
 public:
  explicit FlatCatalog(const Matroid& m)
      : flats_(bucket(m.size(), all_flats(m))),
        coflats_(bucket(m.size(), all_flats(DualView<Matroid>(m)))) {}

  /// Flats F with lo ⊆ F ⊆ hi and e ∈ F.
  template <typename Fn>
  void for_each_flat(ESet lo, ESet hi, Element e, Fn&& fn) const {
    scan(flats_[e], lo, hi, fn);
  }
  template <typename Fn>
  void for_each_coflat(ESet lo, ESet hi, Element e, Fn&& fn) const {
    scan(coflats_[e], lo, hi, fn);
  }

 private:
  static std::vector<std::vector<ESet>> bucket(int size,
                                               const std::vector<ESet>& all) {
    std::vector<std::vector<ESet>> out(size);
    for (ESet f : all) {
      for (Element e : f) out[e].push_back(f);
    }
    return out;
  }
  template <typename Fn>
  static void scan(const std::vector<ESet>& list, ESet lo, ESet hi, Fn& fn) {
    for (ESet f : list) {
      if (lo.subset_of(f) && f.subset_of(hi)) fn(f);
    }
  }

  std::vector<std::vector<ESet>> flats_;
  std::vector<std::vector<ESet>> coflats_;
};

/// Expansion engine for one matroid. Holds a reference to the matroid, which
/// must outlive it. All member functions are const and thread-safe.
class ChowEngine {
 public:
  explicit ChowEngine(const Matroid& m) : m_(&check(m)), catalog_(m) {}
  // Holds a pointer to the matroid.
  explicit ChowEngine(Matroid&&) = delete;

  const Matroid& matroid() const { return *m_; }
  ESet ground() const { return m_->ground(); }
  /// n, where the ground set is {0, ..., n}.
  int n() const { return m_->size() - 1; }
  /// r, where the rank is r+1.
  int r() const { return m_->full_rank() - 1; }

  /// max(E - ∪ F_j ∩ G_j).
  Element pivot(const Monomial& x) const {
    const ESet free = ground() - x.covered();
    if (free.empty()) {
      throw PreconditionError("monomial covers the ground set");
    }
    return free.max();
  }

  /// Canonical expansion of (table monomial)·δ. An empty result means the
  /// product vanishes.
  std::vector<ExpansionTable> delta_step(const ExpansionTable& t) const {
    const Monomial& x = t.monomial;
    const ESet e_set = ground();
    const Element e = pivot(x);
    int j = 0;
    while (j < x.length() && !x[j].flat.contains(e)) ++j;
    const ESet f_lo = x.flat(j, e_set), f_hi = x.flat(j + 1, e_set);
    const ESet g_hi = x.coflat(j, e_set), g_lo = x.coflat(j + 1, e_set);
    if (!g_hi.contains(e) || g_lo.contains(e)) {
      throw std::logic_error("pivot is not a coflat jump of the chain");
    }
    const ESet covered = x.covered();
    std::vector<ExpansionTable> out;
    catalog_.for_each_flat(f_lo, f_hi, e, [&](ESet f) {
      catalog_.for_each_coflat(g_lo, g_hi, e, [&](ESet g) {
        if (!admissible(f, g, covered)) return;
        ExpansionTable next{x.inserted(j, {f, g}), t.arrivals};
        next.arrivals.insert(next.arrivals.begin() + j, e);
        out.push_back(std::move(next));
      });
    });
    return out;
  }

  /// Largest index l with F_l ≠ E (0 when every flat is E).
  static int top_proper_index(const Monomial& x, ESet ground) {
    int l = 0;
    while (l < x.length() && x[l].flat != ground) ++l;
    return l;
  }

  /// Expansion of x·γ_c; requires c ∉ F_l.
  std::vector<Monomial> gamma_step(const Monomial& x, Element c) const {
    const ESet e_set = ground();
    const int l = top_proper_index(x, e_set);
    const ESet f_top = x.flat(l, e_set);
    if (f_top.contains(c)) {
      throw PreconditionError("gamma pivot " + std::to_string(c) +
                              " lies in the top proper flat " +
                              to_string(f_top, e_set));
    }
    const ESet g_hi = x.coflat(l, e_set), g_lo = x.coflat(l + 1, e_set);
    const ESet covered = x.covered();
    std::vector<Monomial> out;
    catalog_.for_each_flat(f_top, e_set, c, [&](ESet f) {
      if (f == e_set) return;
      // F ∪ G = E forces G to contain every element outside F.
      const Element anchor = (e_set - f).min();
      catalog_.for_each_coflat(g_lo, g_hi, anchor, [&](ESet g) {
        if (!admissible(f, g, covered)) return;
        out.push_back(x.inserted(l, {f, g}));
      });
    });
    return out;
  }

  /// The distinct proper flats of the flag have ranks 1, 2, ..., s.
  bool is_initial(const Monomial& x) const {
    int expected = 1;
    ESet last;
    for (const Biflat& b : x.chain()) {
      if (b.flat == ground() || b.flat == last) continue;
      if (m_->rank(b.flat) != expected) return false;
      ++expected;
      last = b.flat;
    }
    return true;
  }

  int distinct_proper_flats(const Monomial& x) const {
    int s = 0;
    ESet last;
    for (const Biflat& b : x.chain()) {
      if (b.flat == ground() || b.flat == last) continue;
      ++s;
      last = b.flat;
    }
    return s;
  }

  /// Sound test for x·γ^k = 0: s + k > r, or s + k = r with k >= 1 and a
  /// non-initial flag.
  bool eradicates(const Monomial& x, int k) const {
    const int s = distinct_proper_flats(x);
    if (s + k > r()) return true;
    return k >= 1 && s + k == r() && !is_initial(x);
  }

  /// Accepts a table of δ^{n-k-1} exactly when it is the nbc monomial of an
  /// nbc basis with k+1 internally active elements, with that basis's
  /// arrival sequence; returns the basis data on acceptance.
  std::optional<NbcCertificate> resistant_filter(const ExpansionTable& t,
                                                 int k) const {
    const Monomial& x = t.monomial;
    const ESet e_set = ground();
    const int d = r() - k;
    if (k < 0 || d < 0 || x.length() != n() - k - 1) return std::nullopt;
    // Shape: F_1 ⊊ ... ⊊ F_d proper with G = E, then F = E with
    // G_{d+1} ⊋ ... ⊋ G_{n-k-1} proper.
    for (int i = 1; i <= x.length(); ++i) {
      const Biflat& b = x[i - 1];
      if (i <= d) {
        if (b.coflat != e_set || b.flat == e_set) return std::nullopt;
        if (i > 1 && b.flat == x[i - 2].flat) return std::nullopt;
      } else {
        if (b.flat != e_set || b.coflat == e_set) return std::nullopt;
        if (i > d + 1 && b.coflat == x[i - 2].coflat) return std::nullopt;
      }
    }
    const std::vector<Element>& arr = t.arrivals;
    for (int i = 1; i < d; ++i) {
      if (arr[i - 1] <= arr[i]) return std::nullopt;
    }
    for (int i = d + 1; i < x.length(); ++i) {
      if (arr[i - 1] >= arr[i]) return std::nullopt;
    }
    ESet s;
    for (int i = 0; i < d; ++i) s.insert(arr[i]);
    if (!is_independent(*m_, s)) return std::nullopt;
    const ESet completion = greedy_completion(*m_, s);
    const ESet basis = s | completion;
    const ActivityRecord rec = activities(*m_, basis);
    if (!rec.externally_active.empty()) return std::nullopt;
    if (rec.internally_active != completion) return std::nullopt;
    if (completion.size() != k + 1) return std::nullopt;
    for (int i = 1; i <= x.length(); ++i) {
      const Biflat& b = x[i - 1];
      const Element expected =
          i <= d ? b.flat.min() : (b.coflat - completion).min();
      if (arr[i - 1] != expected) return std::nullopt;
    }
    const NbcBiflag nbc = nbc_biflag(*m_, basis);
    if (nbc.biflag != x || nbc.arrivals != arr) return std::nullopt;
    return NbcCertificate{basis, rec.internally_active, s, completion};
  }

  /// x·γ_{c_1}···γ_{c_k} for the k largest internally active elements
  /// c_1 > ... > c_k of the certificate, discarding terms that the remaining
  /// γ-factors eradicate. Exactly one term survives.
  Monomial multiply_resistant(const Monomial& x, const NbcCertificate& cert,
                              int k) const {
    std::vector<Element> active = cert.internally_active.elements();
    std::reverse(active.begin(), active.end());
    std::vector<Monomial> current{x};
    for (int i = 1; i <= k; ++i) {
      std::vector<Monomial> next;
      for (const Monomial& y : current) {
        for (Monomial& z : gamma_step(y, active[i - 1])) {
          if (k - i >= 1 && eradicates(z, k - i)) continue;
          next.push_back(std::move(z));
        }
      }
      current = std::move(next);
    }
    if (current.size() != 1) {
      throw std::logic_error(std::to_string(current.size()) +
                             " terms survive multiplication of the nbc "
                             "monomial of " +
                             to_string(cert.basis));
    }
    return current.front();
  }

  /// Adds x·γ^k to `out`, choosing each γ pivot from E - F_l by `policy`.
  void multiply_gamma_power(const Monomial& x, int k, GammaPivot policy,
                            bool prune, MonomialSum& out) const {
    if (k == 0) {
      out.add(x);
      return;
    }
    if (prune && eradicates(x, k)) return;
    const ESet e_set = ground();
    const ESet outside = e_set - x.flat(top_proper_index(x, e_set), e_set);
    const Element c = policy == GammaPivot::kMin ? outside.min() : outside.max();
    for (const Monomial& y : gamma_step(x, c)) {
      multiply_gamma_power(y, k - 1, policy, prune, out);
    }
  }

 private:
  static const Matroid& check(const Matroid& m) {
    m.require_loopless_coloopless();
    if (m.size() < 2) throw PreconditionError("ground set too small");
    return m;
  }

  // F|G is a biflat (F, G come from the catalog and are nonempty) and the
  // extended family still leaves an element uncovered.
  bool admissible(ESet f, ESet g, ESet covered) const {
    const ESet e_set = ground();
    if ((f | g) != e_set) return false;
    if (f == e_set && g == e_set) return false;
    return (covered | (f & g)) != e_set;
  }

  const Matroid* m_;
  FlatCatalog catalog_;
};

/// First violation of the conditions every table of a canonical expansion
/// satisfies: arrivals are distinct, e_i ∈ F_i ∩ G_i, and
/// e_i = max(E - ∪_{j : e_j > e_i} F_j ∩ G_j).
inline std::optional<std::string> expansion_violation(const Matroid& m,
                                                      const ExpansionTable& t) {
  const Monomial& x = t.monomial;
  const ESet ground = m.ground();
  if (static_cast<int>(t.arrivals.size()) != x.length()) {
    return "arrival sequence has the wrong length";
  }
  ESet seen;
  for (int i = 0; i < x.length(); ++i) {
    const Element e = t.arrivals[i];
    if (seen.contains(e)) return "arrival " + element_label(e) + " repeats";
    seen.insert(e);
    if (!(x[i].flat & x[i].coflat).contains(e)) {
      return "arrival " + element_label(e) + " outside F ∩ G at position " +
             std::to_string(i + 1);
    }
    ESet earlier;
    for (int j = 0; j < x.length(); ++j) {
      if (t.arrivals[j] > e) earlier |= x[j].flat & x[j].coflat;
    }
    const ESet free = ground - earlier;
    if (free.empty() || free.max() != e) {
      return "arrival " + element_label(e) + " is not the pivot of its stage";
    }
  }
  return std::nullopt;
}

/// Structural facts about a table that resists γ^k, checked against its
/// certificate. Returns a description of every failure.
inline std::vector<std::string> resistant_violations(const ChowEngine& engine,
                                                     const ExpansionTable& t,
                                                     const NbcCertificate& cert,
                                                     int k) {
  const Matroid& m = engine.matroid();
  const ESet ground = m.ground();
  const Monomial& x = t.monomial;
  const std::vector<Element>& e = t.arrivals;
  const int len = x.length();
  const int d = engine.r() - k;
  std::vector<std::string> out;

  // Descents of the arrivals are flat jumps, ascents are coflat jumps.
  const GapJumpData gj = gap_jump(m, x);
  std::set<int> des{0, d}, asc{d, len};
  for (int i = 1; i < len; ++i) (e[i - 1] > e[i] ? des : asc).insert(i);
  if (std::vector<int>(des.begin(), des.end()) != gj.flat_jumps) {
    out.push_back("flat jumps differ from descents");
  }
  if (std::vector<int>(asc.begin(), asc.end()) != gj.coflat_jumps) {
    out.push_back("coflat jumps differ from ascents");
  }
  if (gj.double_jumps != std::vector<int>{d}) {
    out.push_back("double jump is not unique at r-k");
  }

  // Crossover.
  for (int i = 1; i <= len; ++i) {
    for (int j = i + 1; j <= len; ++j) {
      if (e[i - 1] < e[j - 1] && x[j - 1].coflat.contains(e[i - 1])) {
        out.push_back("crossover fails at " + std::to_string(i) + "," +
                      std::to_string(j));
      }
      if (e[i - 1] > e[j - 1] && x[i - 1].flat.contains(e[j - 1])) {
        out.push_back("crossover fails at " + std::to_string(i) + "," +
                      std::to_string(j));
      }
    }
  }

  // The chain is rebuilt from the arrivals alone.
  for (int j = 1; j <= len; ++j) {
    ESet span;
    Biflat expect;
    if (j <= d) {
      for (int i = 1; i <= j; ++i) span.insert(e[i - 1]);
      expect = {closure(m, span), ground};
    } else {
      for (int i = j; i <= len; ++i) span.insert(e[i - 1]);
      expect = {ground, coclosure(m, span)};
    }
    if (expect != x[j - 1]) {
      out.push_back("position " + std::to_string(j) +
                    " is not determined by the arrivals");
    }
  }
  const DualView<Matroid> dual(m);
  for (int j = 0; j <= len + 1; ++j) {
    int fj = 0, gj_count = 0;
    for (int i : gj.flat_jumps) fj += i < j;
    for (int i : gj.coflat_jumps) gj_count += i >= j;
    // Proper flats sit in ranks 1..d; the step into E can skip ranks.
    if ((j <= d && m.rank(x.flat(j, ground)) != fj) ||
        dual.rank(x.coflat(j, ground)) != gj_count) {
      out.push_back("rank of position " + std::to_string(j) +
                    " differs from its jump count");
    }
  }

  // The nonempty gap sits below every arrival and, with the remaining
  // non-arrivals, splits as P(S) plus min(E - B).
  const ESet gap = gj.gaps[d];
  ESet arrived;
  for (Element a : e) arrived.insert(a);
  if (gap.empty() || gap.max() > arrived.min()) {
    out.push_back("gap is not below every arrival");
  }
  const Element lowest_outside = (ground - cert.basis).min();
  if (!gap.contains(lowest_outside) ||
      (ground - arrived) != cert.completion.with(lowest_outside) ||
      cert.completion.contains(lowest_outside)) {
    out.push_back("non-arrivals differ from P(S) plus min(E-B)");
  }
  return out;
}

struct DeltaExpansion {
  std::vector<ExpansionTable> tables;  // sorted
  Census census;
};

/// Canonical expansion of δ^m, power by power, keeping only the current
/// frontier. The census counts tables and distinct monomials at each power.
inline DeltaExpansion canonical_delta_expansion(const ChowEngine& engine,
                                                int m) {
  if (m < 0 || m > engine.n() - 1) {
    throw std::out_of_range("power must lie in 0..n-1");
  }
  DeltaExpansion out;
  std::vector<ExpansionTable> frontier{ExpansionTable{}};
  auto record = [&](const std::vector<ExpansionTable>& tables) {
    std::set<Monomial> distinct;
    for (const auto& t : tables) distinct.insert(t.monomial);
    out.census.with_multiplicity.push_back(
        static_cast<std::int64_t>(tables.size()));
    out.census.distinct.push_back(static_cast<std::int64_t>(distinct.size()));
    out.census.peak_frontier =
        std::max<std::int64_t>(out.census.peak_frontier, tables.size());
  };
  record(frontier);
  for (int p = 1; p <= m; ++p) {
    std::vector<ExpansionTable> next;
    for (const auto& t : frontier) {
      for (auto& child : engine.delta_step(t)) next.push_back(std::move(child));
    }
    frontier = std::move(next);
    record(frontier);
  }
  std::sort(frontier.begin(), frontier.end());
  out.tables = std::move(frontier);
  return out;
}

inline DeltaExpansion canonical_delta_expansion(const Matroid& m, int power) {
  return canonical_delta_expansion(ChowEngine(m), power);
}

/// Depth-first walk over the canonical expansion tree down to `max_power`,
/// calling visit(table, power) on every node, the root included. Memory
/// stays proportional to the depth times the branching. Returns the census
/// (with multiplicity only) and the largest number of pending tables.
template <typename Visit>
Census walk_delta_expansion(const ChowEngine& engine, int max_power,
                            Visit&& visit) {
  Census census;
  census.with_multiplicity.assign(max_power + 1, 0);
  std::vector<std::pair<ExpansionTable, int>> stack;
  stack.push_back({ExpansionTable{}, 0});
  while (!stack.empty()) {
    census.peak_frontier =
        std::max<std::int64_t>(census.peak_frontier, stack.size());
    auto [table, power] = std::move(stack.back());
    stack.pop_back();
    ++census.with_multiplicity[power];
    visit(table, power);
    if (power == max_power) continue;
    std::vector<ExpansionTable> children = engine.delta_step(table);
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      stack.push_back({std::move(*it), power + 1});
    }
  }
  return census;
}

struct GammaDeltaResult {
  int k = 0;
  Strategy strategy = Strategy::kTheoremPath;
  MonomialSum sum;
  Census census;
  /// Tables of δ^{n-k-1} accepted by the resistant filter (theorem path).
  std::int64_t resistant_tables = 0;
};

struct GammaDeltaOptions {
  GammaPivot pivot = GammaPivot::kMin;
  bool prune = true;
};

/// Per-table contribution to γ^k δ^{n-k-1}.
inline void accumulate_gamma_delta(const ChowEngine& engine,
                                   const ExpansionTable& table, int k,
                                   Strategy strategy,
                                   const GammaDeltaOptions& options,
                                   GammaDeltaResult& result) {
  if (strategy == Strategy::kExhaustive) {
    engine.multiply_gamma_power(table.monomial, k, options.pivot, options.prune,
                                result.sum);
    return;
  }
  const auto cert = engine.resistant_filter(table, k);
  if (!cert) return;
  ++result.resistant_tables;
  result.sum.add(engine.multiply_resistant(table.monomial, *cert, k));
}

/// γ^k δ^{n-k-1} as a sum of maximal biflag monomials.
///   theorem path: keep the tables of δ^{n-k-1} that pass the resistant
///     filter and multiply each by γ_{c_1}···γ_{c_k};
///   exhaustive: multiply every table by γ^k, pivot by pivot.
inline GammaDeltaResult gamma_delta_power(const ChowEngine& engine, int k,
                                          Strategy strategy,
                                          const GammaDeltaOptions& options = {}) {
  if (k < 0 || k > engine.r()) throw std::out_of_range("k must lie in 0..r");
  GammaDeltaResult result;
  result.k = k;
  result.strategy = strategy;
  const int power = engine.n() - k - 1;
  result.census = walk_delta_expansion(
      engine, power, [&](const ExpansionTable& t, int p) {
        if (p == power) {
          accumulate_gamma_delta(engine, t, k, strategy, options, result);
        }
      });
  return result;
}

inline GammaDeltaResult gamma_delta_power(const Matroid& m, int k,
                                          Strategy strategy,
                                          const GammaDeltaOptions& options = {}) {
  return gamma_delta_power(ChowEngine(m), k, strategy, options);
}

/// Degree map on degree-(n-1) classes: each biflag monomial counts its
/// multiplicity, every other monomial counts 0.
inline std::int64_t degree(const Matroid& m, const MonomialSum& sum) {
  std::int64_t total = 0;
  for (const auto& [x, c] : sum.terms()) {
    if (x.length() != m.size() - 2) {
      throw PreconditionError("degree needs monomials of degree n-1, got " +
                              std::to_string(x.length()));
    }
    if (is_biflag(m, x)) total += c;
  }
  return total;
}

/// {extended nbc biflag of B : B nbc, |IA(B)| = k+1}.
inline MonomialSum extended_nbc_sum(const Matroid& m, int k) {
  MonomialSum out;
  for (const ActivityRecord& rec : nbc_bases(m)) {
    if (rec.internally_active.size() == k + 1) {
      out.add(extended_nbc_biflag(m, rec.basis).biflag);
    }
  }
  return out;
}

/// Result of checking γ^k δ^{n-k-1} = Σ extended nbc monomials for one k.
struct TheoremCheck {
  int k = 0;
  std::int64_t expected = 0;  // t_{k+1,0}
  GammaDeltaResult theorem_path;
  GammaDeltaResult exhaustive;
  MonomialSum extended_nbc;
  bool bijective = false;  // theorem path == extended nbc set, multiplicity 1
  bool counts_match = false;

  bool passed() const { return bijective && counts_match; }
};

/// Checks every k in `ks` in one depth-first pass over δ^0, ..., δ^{n-1}.
inline std::vector<TheoremCheck> verify_theorem(
    const ChowEngine& engine, const std::vector<int>& ks,
    const GammaDeltaOptions& options = {}) {
  const Matroid& m = engine.matroid();
  const TuttePolynomial t = tutte(m);
  std::vector<TheoremCheck> checks;
  std::map<int, std::size_t> by_power;
  int deepest = 0;
  for (int k : ks) {
    if (k < 0 || k > engine.r()) throw std::out_of_range("k must lie in 0..r");
    TheoremCheck c;
    c.k = k;
    c.expected = t.coefficient(k + 1, 0);
    c.theorem_path.k = c.exhaustive.k = k;
    c.exhaustive.strategy = Strategy::kExhaustive;
    c.extended_nbc = extended_nbc_sum(m, k);
    by_power[engine.n() - k - 1] = checks.size();
    deepest = std::max(deepest, engine.n() - k - 1);
    checks.push_back(std::move(c));
  }
  const Census census = walk_delta_expansion(
      engine, deepest, [&](const ExpansionTable& table, int p) {
        auto it = by_power.find(p);
        if (it == by_power.end()) return;
        TheoremCheck& c = checks[it->second];
        accumulate_gamma_delta(engine, table, c.k, Strategy::kTheoremPath,
                               options, c.theorem_path);
        accumulate_gamma_delta(engine, table, c.k, Strategy::kExhaustive,
                               options, c.exhaustive);
      });
  for (TheoremCheck& c : checks) {
    const int power = engine.n() - c.k - 1;
    Census own;
    own.with_multiplicity.assign(census.with_multiplicity.begin(),
                                 census.with_multiplicity.begin() + power + 1);
    own.peak_frontier = census.peak_frontier;
    c.theorem_path.census = c.exhaustive.census = own;
    bool unit = true;
    for (const auto& [x, mult] : c.theorem_path.sum.terms()) unit &= mult == 1;
    c.bijective = unit && c.theorem_path.sum == c.extended_nbc;
    c.counts_match = c.theorem_path.sum.total() == c.expected &&
                     c.exhaustive.sum.total() == c.expected;
  }
  return checks;
}

}  // namespace lagrangian

#endif  // LAGRANGIAN_CHOW_HPP_
