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

// Basis activities on an ordered ground set and the enumerative data built
// from them: the Tutte polynomial as an activity sum, nbc bases, the broken
// circuit complex with its f- and h-vectors, and the lexicographically
// smallest completion of an independent set to a basis.

#ifndef LAGRANGIAN_ACTIVITY_HPP_
#define LAGRANGIAN_ACTIVITY_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "lagrangian/eset.hpp"
#include "lagrangian/matroid.hpp"

namespace lagrangian {

struct ActivityRecord {
  ESet basis;
  ESet internally_active;
  ESet externally_active;
  ESet internally_passive;
  ESet externally_passive;

  bool operator==(const ActivityRecord&) const = default;
};

/// Coefficients t_{i,j} of x^i y^j.
struct TuttePolynomial {
  std::map<std::pair<int, int>, std::int64_t> coefficients;

  std::int64_t coefficient(int i, int j) const {
    auto it = coefficients.find({i, j});
    return it == coefficients.end() ? 0 : it->second;
  }
  std::int64_t evaluate_at_one() const {
    std::int64_t total = 0;
    for (const auto& [key, c] : coefficients) total += c;
    return total;
  }
};

struct FHVector {
  std::vector<std::int64_t> f;
  std::vector<std::int64_t> h;
};

struct BrokenCircuitVectors {
  FHVector bc;
  FHVector rbc;
  std::int64_t beta = 0;
};

/// All bases, in lexicographic order of their increasing element sequences.
/// Elements are tried in order and a branch is cut as soon as the remaining
/// elements cannot complete it to full rank.
template <RankOracle M>
std::vector<ESet> all_bases(const M& m) {
  std::vector<ESet> out;
  const int target = m.full_rank();
  const int n = m.size();
  const ESet ground = m.ground();
  auto extend = [&](auto&& self, Element next, ESet current) -> void {
    if (current.size() == target) {
      out.push_back(current);
      return;
    }
    if (next == n) return;
    const ESet with_next = current.with(next);
    if (m.rank(with_next) == with_next.size()) self(self, next + 1, with_next);
    const ESet rest = ground - ESet::full(next + 1);
    if (m.rank(current | rest) == target) self(self, next + 1, current);
  };
  extend(extend, 0, ESet());
  return out;
}

/// Every circuit, sorted by word order. Each circuit is the fundamental
/// circuit of some basis, so the scan over bases finds them all.
template <RankOracle M>
std::vector<ESet> circuits(const M& m) {
  std::vector<ESet> out;
  for (ESet b : all_bases(m)) {
    for (Element e : m.ground() - b) out.push_back(fundamental_circuit(m, b, e));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<ESet> cocircuits(const Matroid& m) {
  return circuits(DualView<Matroid>(m));
}

/// EA(B) = {i ∉ B : i = min C(B,i)}, IA(B) = {i ∈ B : i = min C*(B,i)}.
inline ActivityRecord activities(const Matroid& m, ESet basis) {
  if (!is_basis(m, basis)) {
    throw PreconditionError(to_string(basis) + " is not a basis");
  }
  ActivityRecord rec;
  rec.basis = basis;
  const ESet complement = m.ground() - basis;
  for (Element i : complement) {
    if (fundamental_circuit(m, basis, i).min() == i) {
      rec.externally_active.insert(i);
    }
  }
  for (Element i : basis) {
    if (fundamental_cocircuit(m, basis, i).min() == i) {
      rec.internally_active.insert(i);
    }
  }
  rec.internally_passive = basis - rec.internally_active;
  rec.externally_passive = complement - rec.externally_active;
  return rec;
}

/// Bases with no externally active element, with their activity records.
inline std::vector<ActivityRecord> nbc_bases(const Matroid& m) {
  std::vector<ActivityRecord> out;
  for (ESet b : all_bases(m)) {
    ActivityRecord rec = activities(m, b);
    if (rec.externally_active.empty()) out.push_back(rec);
  }
  return out;
}

/// T(x,y) = Σ_B x^|IA(B)| y^|EA(B)|.
inline TuttePolynomial tutte(const Matroid& m) {
  TuttePolynomial t;
  for (ESet b : all_bases(m)) {
    const ActivityRecord rec = activities(m, b);
    ++t.coefficients[{rec.internally_active.size(),
                      rec.externally_active.size()}];
  }
  return t;
}

/// {C - min C : C a circuit}, sorted by word order.
inline std::vector<ESet> broken_circuits(const Matroid& m) {
  std::vector<ESet> out;
  for (ESet c : circuits(m)) out.push_back(c.without(c.min()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Broken circuits that contain no other broken circuit.
inline std::vector<ESet> minimal_broken_circuits(const Matroid& m) {
  const std::vector<ESet> all = broken_circuits(m);
  std::vector<ESet> out;
  for (ESet bc : all) {
    const bool minimal = std::none_of(all.begin(), all.end(), [&](ESet other) {
      return other != bc && other.subset_of(bc);
    });
    if (minimal) out.push_back(bc);
  }
  return out;
}

/// Calls fn on every face of the broken circuit complex. Faces are built by
/// adding elements in increasing order and backtracking as soon as a broken
/// circuit appears.
template <typename Fn>
void for_each_bc_face(const Matroid& m, Fn&& fn) {
  if (!m.loops().empty()) {
    throw PreconditionError("broken circuit complex needs a loopless matroid");
  }
  const std::vector<ESet> minimal = minimal_broken_circuits(m);
  const int n = m.size();
  auto grow = [&](auto&& self, Element next, ESet face) -> void {
    fn(face);
    for (Element e = next; e < n; ++e) {
      const ESet candidate = face.with(e);
      const bool blocked =
          std::any_of(minimal.begin(), minimal.end(),
                      [&](ESet bc) { return bc.contains(e) && bc.subset_of(candidate); });
      if (!blocked) self(self, e + 1, candidate);
    }
  };
  grow(grow, 0, ESet());
}

inline std::vector<ESet> bc_faces(const Matroid& m) {
  std::vector<ESet> out;
  for_each_bc_face(m, [&](ESet face) { out.push_back(face); });
  return out;
}

inline std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

/// h from f for a complex whose facets have `d` vertices:
/// h_k = Σ_{i≤k} (-1)^{k-i} C(d-i, k-i) f_i.
inline std::vector<std::int64_t> h_from_f(const std::vector<std::int64_t>& f,
                                          int d) {
  std::vector<std::int64_t> h(f.size(), 0);
  for (int k = 0; k < static_cast<int>(f.size()); ++k) {
    for (int i = 0; i <= k; ++i) {
      const std::int64_t sign = ((k - i) % 2 == 0) ? 1 : -1;
      h[k] += sign * binomial(d - i, k - i) * f[i];
    }
  }
  return h;
}

/// f- and h-vectors of BC(M) (length r+2) and of RBC(M), the faces avoiding
/// the cone apex 0 (length r+1). beta = h_r(BC(M)).
inline BrokenCircuitVectors fh_vectors(const Matroid& m) {
  const int facet = m.full_rank();
  BrokenCircuitVectors out;
  out.bc.f.assign(facet + 1, 0);
  out.rbc.f.assign(facet, 0);
  for_each_bc_face(m, [&](ESet face) {
    ++out.bc.f[face.size()];
    if (!face.contains(0)) ++out.rbc.f[face.size()];
  });
  out.bc.h = h_from_f(out.bc.f, facet);
  out.rbc.h = h_from_f(out.rbc.f, facet - 1);
  out.beta = out.bc.h[facet - 1];
  return out;
}

/// P(S): scan the ground set in increasing order and keep every element that
/// preserves independence. S ⊔ P(S) is the lexicographically smallest basis
/// containing S.
inline ESet greedy_completion(const Matroid& m, ESet s) {
  if (!is_independent(m, s)) {
    throw PreconditionError(to_string(s) + " is dependent");
  }
  ESet current = s;
  ESet added;
  for (Element e : m.ground() - s) {
    if (current.size() == m.full_rank()) break;
    if (m.rank(current.with(e)) == current.size() + 1) {
      current.insert(e);
      added.insert(e);
    }
  }
  return added;
}

/// {e ∉ S : some cocircuit C* ⊆ avoid has e = min C*}.
inline ESet minima_of_cocircuits_inside(const std::vector<ESet>& cocircs,
                                        ESet s, ESet avoid) {
  ESet out;
  for (ESet c : cocircs) {
    if (c.subset_of(avoid)) out.insert(c.min());
  }
  return out - s;
}

/// P(S) read off from cocircuits contained in E - S.
inline ESet completion_by_cocircuits(const Matroid& m, ESet s) {
  return minima_of_cocircuits_inside(cocircuits(m), s, m.ground() - s);
}

/// P(S) read off from cocircuits contained in E - cl(S).
inline ESet completion_by_closure(const Matroid& m, ESet s) {
  return minima_of_cocircuits_inside(cocircuits(m), s,
                                     m.ground() - closure(m, s));
}

struct SetActivities {
  ESet internally_active;
  ESet externally_active;
};

/// Activities of an arbitrary subset S:
///   IA(S) = {e ∈ S : a cocircuit C* ⊆ (E-S)+e has e = min C*},
///   EA(S) = {e ∉ S : a circuit C ⊆ S+e has e = min C}.
/// A circuit through e inside S+e with minimum e exists iff e ∈ cl(S above e),
/// and dually for cocircuits.
inline SetActivities set_activities(const Matroid& m, ESet s) {
  SetActivities out;
  const DualView<Matroid> dual(m);
  for (Element e : m.ground() - s) {
    const ESet above = s.above(e);
    if (m.rank(above.with(e)) == m.rank(above)) out.externally_active.insert(e);
  }
  const ESet outside = m.ground() - s;
  for (Element e : s) {
    const ESet above = outside.above(e);
    if (dual.rank(above.with(e)) == dual.rank(above)) {
      out.internally_active.insert(e);
    }
  }
  return out;
}

}  // namespace lagrangian

#endif  // LAGRANGIAN_ACTIVITY_HPP_
