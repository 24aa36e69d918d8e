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

// Biflats, biflags and their tables.
//
// A biflat F|G pairs a flat F of M with a flat G of the dual, both nonempty,
// not both E, covering E. A biflag is a set of pairwise compatible biflats
// whose intersections F∩G leave some element uncovered. Compatible biflats
// form a chain F_1 ⊆ ... ⊆ F_k, G_1 ⊇ ... ⊇ G_k, and a Biflag stores them in
// that order; index 0 and k+1 refer to the sentinels ∅|E and E|∅.

#ifndef LAGRANGIAN_CONORMAL_HPP_
#define LAGRANGIAN_CONORMAL_HPP_

#include <algorithm>
#include <compare>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagrangian/activity.hpp"
#include "lagrangian/eset.hpp"
#include "lagrangian/matroid.hpp"

namespace lagrangian {

struct Biflat {
  ESet flat;
  ESet coflat;

  bool operator==(const Biflat&) const = default;

  /// Chain order: |F| ascending, |G| descending, then word order. On a set
  /// of pairwise compatible biflats this is the order of the chain.
  std::strong_ordering operator<=>(const Biflat& o) const {
    if (auto c = flat.size() <=> o.flat.size(); c != 0) return c;
    if (auto c = o.coflat.size() <=> coflat.size(); c != 0) return c;
    if (auto c = flat <=> o.flat; c != 0) return c;
    return coflat <=> o.coflat;
  }
};

/// A biflag (or, for inputs that fail validation, just a set of biflats) in
/// canonical chain order.
class Biflag {
 public:
  Biflag() = default;
  explicit Biflag(std::vector<Biflat> biflats) : chain_(std::move(biflats)) {
    std::sort(chain_.begin(), chain_.end());
  }

  int length() const { return static_cast<int>(chain_.size()); }
  bool empty() const { return chain_.empty(); }
  const std::vector<Biflat>& chain() const { return chain_; }
  const Biflat& operator[](int i) const { return chain_[i]; }

  /// F_j for 0 <= j <= k+1, with F_0 = ∅ and F_{k+1} = E.
  ESet flat(int j, ESet ground) const {
    if (j <= 0) return ESet();
    if (j > length()) return ground;
    return chain_[j - 1].flat;
  }
  /// G_j for 0 <= j <= k+1, with G_0 = E and G_{k+1} = ∅.
  ESet coflat(int j, ESet ground) const {
    if (j <= 0) return ground;
    if (j > length()) return ESet();
    return chain_[j - 1].coflat;
  }

  /// ∪_j (F_j ∩ G_j).
  ESet covered() const {
    ESet out;
    for (const Biflat& b : chain_) out |= b.flat & b.coflat;
    return out;
  }

  /// Inserts at chain position `index` (0-based) without re-sorting; the
  /// caller guarantees the result is still in chain order.
  Biflag inserted(int index, Biflat b) const {
    Biflag out = *this;
    out.chain_.insert(out.chain_.begin() + index, b);
    return out;
  }

  bool operator==(const Biflag&) const = default;
  auto operator<=>(const Biflag& o) const {
    return std::lexicographical_compare_three_way(
        chain_.begin(), chain_.end(), o.chain_.begin(), o.chain_.end());
  }

 private:
  std::vector<Biflat> chain_;
};

inline bool is_biflat(const Matroid& m, ESet flat, ESet coflat) {
  const ESet ground = m.ground();
  if (flat.empty() || coflat.empty()) return false;
  if (flat == ground && coflat == ground) return false;
  if ((flat | coflat) != ground) return false;
  return is_flat(m, flat) && is_coflat(m, coflat);
}

inline bool is_biflat(const Matroid& m, const Biflat& b) {
  return is_biflat(m, b.flat, b.coflat);
}

inline bool compatible(const Biflat& a, const Biflat& b) {
  return (a.flat.subset_of(b.flat) && b.coflat.subset_of(a.coflat)) ||
         (b.flat.subset_of(a.flat) && a.coflat.subset_of(b.coflat));
}

/// Pairwise compatible, repetition-free biflats leaving some element of E
/// outside every F∩G.
inline bool is_biflag(const Matroid& m, const std::vector<Biflat>& biflats) {
  ESet covered;
  for (std::size_t i = 0; i < biflats.size(); ++i) {
    if (!is_biflat(m, biflats[i])) return false;
    for (std::size_t j = 0; j < i; ++j) {
      if (biflats[i] == biflats[j] || !compatible(biflats[i], biflats[j])) {
        return false;
      }
    }
    covered |= biflats[i].flat & biflats[i].coflat;
  }
  return covered != m.ground();
}

inline bool is_biflag(const Matroid& m, const Biflag& b) {
  return is_biflag(m, b.chain());
}

struct GapJumpData {
  std::vector<ESet> gaps;  // D_0, ..., D_k
  std::vector<int> flat_jumps;
  std::vector<int> coflat_jumps;
  std::vector<int> double_jumps;
};

/// D_j = E - (F_j ∪ G_{j+1}); j is a flat jump when F_j ⊊ F_{j+1} and a
/// coflat jump when G_j ⊋ G_{j+1}, for 0 <= j <= k.
inline GapJumpData gap_jump(const Matroid& m, const Biflag& b) {
  if (!is_biflag(m, b)) throw PreconditionError("input is not a biflag");
  const ESet ground = m.ground();
  GapJumpData out;
  for (int j = 0; j <= b.length(); ++j) {
    out.gaps.push_back(ground - (b.flat(j, ground) | b.coflat(j + 1, ground)));
    const bool fj = b.flat(j, ground) != b.flat(j + 1, ground);
    const bool gj = b.coflat(j, ground) != b.coflat(j + 1, ground);
    if (fj) out.flat_jumps.push_back(j);
    if (gj) out.coflat_jumps.push_back(j);
    if (fj && gj) out.double_jumps.push_back(j);
  }
  return out;
}

/// Grows a biflag to a maximal one (length n-1), one biflat at a time:
/// first wherever a step of the flag skips a rank (inserting the
/// lexicographically smallest intermediate flat or coflat), otherwise by
/// splitting a double jump that is not the only gap.
inline Biflag extend_to_maximal(const Matroid& m, Biflag b) {
  if (!is_biflag(m, b)) throw PreconditionError("input is not a biflag");
  const ESet ground = m.ground();
  const DualView<Matroid> dual(m);
  const int target = m.size() - 2;
  std::vector<ESet> flats = all_flats(m);
  std::vector<ESet> coflats = all_flats(dual);
  std::sort(flats.begin(), flats.end(), lex_less);
  std::sort(coflats.begin(), coflats.end(), lex_less);

  auto try_add = [&](const Biflat& candidate) -> bool {
    std::vector<Biflat> next = b.chain();
    next.push_back(candidate);
    if (!is_biflag(m, next)) return false;
    b = Biflag(std::move(next));
    return true;
  };

  auto step = [&]() -> bool {
    const int k = b.length();
    for (int i = 1; i <= k + 1; ++i) {
      const ESet f_prev = b.flat(i - 1, ground), f_cur = b.flat(i, ground);
      const ESet g_prev = b.coflat(i - 1, ground), g_cur = b.coflat(i, ground);
      if (m.rank(f_cur) - m.rank(f_prev) >= 2) {
        for (ESet f : flats) {
          if (f == f_prev || f == f_cur) continue;
          if (!f_prev.subset_of(f) || !f.subset_of(f_cur)) continue;
          const Biflat candidate =
              (f | g_cur) != ground ? Biflat{f, g_prev} : Biflat{f, g_cur};
          if (try_add(candidate)) return true;
        }
      }
      if (dual.rank(g_prev) - dual.rank(g_cur) >= 2) {
        for (ESet g : coflats) {
          if (g == g_prev || g == g_cur) continue;
          if (!g_cur.subset_of(g) || !g.subset_of(g_prev)) continue;
          const Biflat candidate =
              (f_prev | g) != ground ? Biflat{f_cur, g} : Biflat{f_prev, g};
          if (try_add(candidate)) return true;
        }
      }
    }
    // Every step has rank jumps of at most one on each side. Split a double
    // jump j while another index still leaves a gap.
    std::vector<int> doubles;
    std::vector<int> witnesses;
    for (int i = 1; i <= k + 1; ++i) {
      const bool fj = b.flat(i - 1, ground) != b.flat(i, ground);
      const bool gj = b.coflat(i - 1, ground) != b.coflat(i, ground);
      if (fj && gj) doubles.push_back(i);
      if ((b.flat(i - 1, ground) | b.coflat(i, ground)) != ground) {
        witnesses.push_back(i);
      }
    }
    for (int j : doubles) {
      const bool other_witness = std::any_of(
          witnesses.begin(), witnesses.end(), [&](int w) { return w != j; });
      if (!other_witness) continue;
      const ESet f = b.flat(j, ground), g = b.coflat(j - 1, ground);
      if (f == ground && g == ground) continue;
      if (try_add(Biflat{f, g})) return true;
    }
    return false;
  };

  while (b.length() < target) {
    if (!step()) {
      throw std::logic_error("biflag of length " + std::to_string(b.length()) +
                             " admits no extension");
    }
  }
  return b;
}

/// The biflag of an nbc basis together with its arrival sequence.
struct NbcBiflag {
  Biflag biflag;
  std::vector<Element> arrivals;
  ActivityRecord activity;
};

/// For an nbc basis B with |IA(B)| = k+1, write B - IA(B) = {e_1 > ... >
/// e_{r-k}} and (E - B) - min(E - B) = {e_{r-k+1} < ... < e_{n-k-1}}. The
/// flags are cl(e_1..e_j)|E for j <= r-k and E|cl*(e_j..e_{n-k-1}) after.
inline NbcBiflag nbc_biflag(const Matroid& m, ESet basis) {
  const ActivityRecord rec = activities(m, basis);
  if (!rec.externally_active.empty()) {
    throw PreconditionError(to_string(basis) + " is not an nbc basis");
  }
  const ESet ground = m.ground();
  const DualView<Matroid> dual(m);
  std::vector<Element> passive = rec.internally_passive.elements();
  std::reverse(passive.begin(), passive.end());
  const ESet complement = ground - basis;
  std::vector<Element> tail = complement.without(complement.min()).elements();

  NbcBiflag out;
  out.activity = rec;
  std::vector<Biflat> chain;
  ESet prefix;
  for (Element e : passive) {
    prefix.insert(e);
    chain.push_back({closure(m, prefix), ground});
    out.arrivals.push_back(e);
  }
  std::vector<Biflat> tail_chain;
  ESet suffix;
  for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
    suffix.insert(*it);
    tail_chain.push_back({ground, closure(dual, suffix)});
  }
  std::reverse(tail_chain.begin(), tail_chain.end());
  chain.insert(chain.end(), tail_chain.begin(), tail_chain.end());
  out.arrivals.insert(out.arrivals.end(), tail.begin(), tail.end());
  out.biflag = Biflag(std::move(chain));
  return out;
}

struct ExtendedNbcBiflag {
  Biflag biflag;
  /// Columns inserted at the double jump of the nbc biflag, in order.
  std::vector<Biflat> inserted;
  /// Position (1-based among the inserted columns) where the coflat row
  /// switches from E to cl*(T).
  int switch_index = 0;
  ESet independent_part;  // S = B - IA(B)
  ESet dual_tail;         // T = (E - B) - min(E - B)
};

/// Inserts the k columns cl(S, c_1..c_j) between the two halves of the nbc
/// biflag, where IA(B) = {c_1 > ... > c_{k+1}}. The coflat row switches from
/// E to cl*(T) at the index i computed two ways: the largest i with c_i
/// outside cl(S) ∪ cl*(T), and the smallest i with cl(S, c_1..c_i) ∪ cl*(T)
/// = E. Disagreement is reported as a logic_error.
inline ExtendedNbcBiflag extended_nbc_biflag(const Matroid& m, ESet basis) {
  const NbcBiflag base = nbc_biflag(m, basis);
  const ESet ground = m.ground();
  const DualView<Matroid> dual(m);
  std::vector<Element> active = base.activity.internally_active.elements();
  std::reverse(active.begin(), active.end());
  const int k = static_cast<int>(active.size()) - 1;

  ExtendedNbcBiflag out;
  out.independent_part = base.activity.internally_passive;
  const ESet complement = ground - basis;
  out.dual_tail = complement.without(complement.min());
  const ESet flat_s = closure(m, out.independent_part);
  const ESet coflat_t = closure(dual, out.dual_tail);

  int by_largest = 0;
  for (int i = 1; i <= k + 1; ++i) {
    if (!(flat_s | coflat_t).contains(active[i - 1])) by_largest = i;
  }
  int by_smallest = 0;
  ESet span = out.independent_part;
  for (int i = 1; i <= k + 1; ++i) {
    span.insert(active[i - 1]);
    if ((closure(m, span) | coflat_t) == ground) {
      by_smallest = i;
      break;
    }
  }
  if (by_largest == 0 || by_largest != by_smallest) {
    throw std::logic_error("switch index mismatch for basis " +
                           to_string(basis) + ": " + std::to_string(by_largest) +
                           " vs " + std::to_string(by_smallest));
  }
  out.switch_index = by_largest;

  std::vector<Biflat> chain = base.biflag.chain();
  span = out.independent_part;
  for (int j = 1; j <= k; ++j) {
    span.insert(active[j - 1]);
    const Biflat col{closure(m, span), j < out.switch_index ? ground : coflat_t};
    out.inserted.push_back(col);
    chain.push_back(col);
  }
  out.biflag = Biflag(std::move(chain));
  return out;
}

namespace detail {

inline int display_width(const std::string& s) {
  int w = 0;
  for (unsigned char ch : s) {
    if ((ch & 0xC0) != 0x80) ++w;
  }
  return w;
}

inline std::string pad(const std::string& s, int width) {
  return s + std::string(std::max(0, width - display_width(s)), ' ');
}

}  // namespace detail

/// Table of a biflag in row layout: the flag row, the coflag row and, when
/// arrivals are given, the arrival row. The sentinel columns ∅|E and E|∅ are
/// included and each double jump is marked with a ⊊/⊋ column (carrying the
/// gap in the arrival row when it is nonempty).
inline std::string render_table(const Matroid& m, const Biflag& b,
                                const std::vector<Element>& arrivals = {}) {
  const ESet ground = m.ground();
  const bool with_arrivals = !arrivals.empty();
  std::vector<std::vector<std::string>> cols;
  std::vector<int> double_jumps;
  for (int j = 0; j <= b.length(); ++j) {
    if (b.flat(j, ground) != b.flat(j + 1, ground) &&
        b.coflat(j, ground) != b.coflat(j + 1, ground)) {
      double_jumps.push_back(j);
    }
  }
  for (int j = 0; j <= b.length(); ++j) {
    if (j >= 1) {
      cols.push_back({to_string(b[j - 1].flat, ground),
                      to_string(b[j - 1].coflat, ground),
                      with_arrivals ? element_label(arrivals[j - 1]) : ""});
    }
    if (std::find(double_jumps.begin(), double_jumps.end(), j) !=
        double_jumps.end()) {
      const ESet gap = ground - (b.flat(j, ground) | b.coflat(j + 1, ground));
      cols.push_back(
          {"⊊", "⊋", with_arrivals && !gap.empty() ? to_string(gap) : ""});
    }
  }
  std::ostringstream out;
  const int rows = with_arrivals ? 3 : 2;
  const char* left[] = {"∅", "E", " "};
  const char* right[] = {"E", "∅", " "};
  for (int r = 0; r < rows; ++r) {
    out << "| " << left[r] << " |";
    for (const auto& c : cols) {
      int w = 0;
      for (const auto& cell : c) w = std::max(w, detail::display_width(cell));
      out << ' ' << detail::pad(c[r], w);
    }
    out << " | " << right[r] << " |\n";
  }
  return out.str();
}

}  // namespace lagrangian

#endif  // LAGRANGIAN_CONORMAL_HPP_
