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

// Ordered matroids on at most 64 elements, given by a rank oracle.
//
// Two backends are supported: graphic matroids (rank = size of a spanning
// forest, computed with union-find) and explicit basis lists (rank = largest
// intersection with a basis). Small ground sets get a precomputed rank table,
// which makes every query a single lookup. A Matroid is immutable after
// construction, so it can be shared freely between threads.

#ifndef LAGRANGIAN_MATROID_HPP_
#define LAGRANGIAN_MATROID_HPP_

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "lagrangian/eset.hpp"

namespace lagrangian {

/// Raised for malformed matroid input (bad labels, inconsistent bases, ...).
class InvalidMatroid : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is called outside its domain (e.g. asking for
/// the fundamental circuit of an element that is already in the basis).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename M>
concept RankOracle = requires(const M& m, ESet s) {
  { m.size() } -> std::convertible_to<int>;
  { m.ground() } -> std::same_as<ESet>;
  { m.full_rank() } -> std::convertible_to<int>;
  { m.rank(s) } -> std::convertible_to<int>;
};

struct GraphEdge {
  Element label;
  int u;
  int v;
};

class Matroid {
 public:
  enum class Backend { kGraphic, kBases };

  /// Graphic matroid of an edge list. Labels must be exactly 0..n; the
  /// element order is the label order. Self-loops are accepted and become
  /// loops of the matroid.
  static Matroid from_graph(std::vector<GraphEdge> edges) {
    if (edges.empty()) throw InvalidMatroid("graph has no edges");
    if (edges.size() > kMaxElements) {
      throw InvalidMatroid("more than 64 edges");
    }
    std::sort(edges.begin(), edges.end(),
              [](const GraphEdge& a, const GraphEdge& b) {
                return a.label < b.label;
              });
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i > 0 && edges[i].label == edges[i - 1].label) {
        throw InvalidMatroid("duplicate edge label " +
                             std::to_string(edges[i].label));
      }
      if (edges[i].label != static_cast<Element>(i)) {
        throw InvalidMatroid("edge labels must be 0..n without gaps; missing " +
                             std::to_string(i));
      }
    }
    Matroid m;
    m.backend_ = Backend::kGraphic;
    m.size_ = static_cast<int>(edges.size());
    std::map<int, int> vertex_index;
    for (const GraphEdge& e : edges) {
      vertex_index.emplace(e.u, 0);
      vertex_index.emplace(e.v, 0);
    }
    int next = 0;
    for (auto& [vertex, index] : vertex_index) index = next++;
    m.vertex_count_ = next;
    for (const GraphEdge& e : edges) {
      m.endpoints_.emplace_back(vertex_index[e.u], vertex_index[e.v]);
    }
    m.edges_ = std::move(edges);
    m.finish();
    return m;
  }

  /// Matroid given by its full list of bases on {0, ..., size-1}.
  static Matroid from_bases(int size, std::vector<ESet> bases) {
    if (size <= 0 || size > kMaxElements) {
      throw InvalidMatroid("ground set size must be in 1..64");
    }
    if (bases.empty()) throw InvalidMatroid("empty basis list");
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    const ESet ground = ESet::full(size);
    const int card = bases.front().size();
    for (ESet b : bases) {
      if (!b.subset_of(ground)) {
        throw InvalidMatroid("basis " + to_string(b) +
                             " is not contained in the ground set");
      }
      if (b.size() != card) {
        throw InvalidMatroid("bases have unequal cardinalities");
      }
    }
    check_exchange(bases);
    Matroid m;
    m.backend_ = Backend::kBases;
    m.size_ = size;
    m.bases_ = std::move(bases);
    m.finish();
    return m;
  }

  Backend backend() const { return backend_; }
  int size() const { return size_; }
  ESet ground() const { return ESet::full(size_); }
  int full_rank() const { return full_rank_; }
  int dual_rank() const { return size_ - full_rank_; }

  int rank(ESet s) const {
    if (rank_table_) return (*rank_table_)[s.bits()];
    return compute_rank(s);
  }

  ESet loops() const { return loops_; }
  ESet coloops() const { return coloops_; }

  /// Throws PreconditionError unless the matroid has no loops and no coloops.
  void require_loopless_coloopless() const {
    if (!loops_.empty()) {
      throw PreconditionError("matroid has loops: " + to_string(loops_));
    }
    if (!coloops_.empty()) {
      throw PreconditionError("matroid has coloops: " + to_string(coloops_));
    }
  }

  /// Edge list of a graphic matroid, sorted by label; empty otherwise.
  const std::vector<GraphEdge>& edges() const { return edges_; }
  /// Basis list of a bases-backed matroid; empty otherwise.
  const std::vector<ESet>& basis_list() const { return bases_; }

 private:
  static constexpr int kRankTableLimit = 20;

  Matroid() = default;

  // Exchange axiom on all pairs for short lists, on a fixed-seed sample of
  // pairs otherwise.
  static void check_exchange(const std::vector<ESet>& bases) {
    std::unordered_set<ESet> lookup(bases.begin(), bases.end());
    auto check_pair = [&](ESet b1, ESet b2) {
      for (Element x : b1 - b2) {
        bool found = false;
        for (Element y : b2 - b1) {
          if (lookup.count(b1.without(x).with(y))) {
            found = true;
            break;
          }
        }
        if (!found) {
          throw InvalidMatroid("basis exchange fails for " + to_string(b1) +
                               " and " + to_string(b2));
        }
      }
    };
    constexpr std::size_t kExhaustive = 200;
    if (bases.size() <= kExhaustive) {
      for (ESet b1 : bases) {
        for (ESet b2 : bases) check_pair(b1, b2);
      }
      return;
    }
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);
    for (int i = 0; i < 4000; ++i) check_pair(bases[pick(rng)], bases[pick(rng)]);
  }

  int compute_rank(ESet s) const {
    if (backend_ == Backend::kBases) {
      int best = 0;
      for (ESet b : bases_) best = std::max(best, (s & b).size());
      return best;
    }
    std::vector<int> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int r = 0;
    for (Element e : s) {
      int a = find(endpoints_[e].first);
      int b = find(endpoints_[e].second);
      if (a != b) {
        parent[a] = b;
        ++r;
      }
    }
    return r;
  }

  void finish() {
    if (size_ <= kRankTableLimit) {
      auto table = std::make_shared<std::vector<std::uint8_t>>(
          std::size_t{1} << size_);
      for (std::uint64_t s = 0; s < table->size(); ++s) {
        (*table)[s] = static_cast<std::uint8_t>(compute_rank(ESet(s)));
      }
      rank_table_ = std::move(table);
    }
    full_rank_ = rank(ground());
    for (Element e = 0; e < size_; ++e) {
      if (rank(ESet::single(e)) == 0) loops_.insert(e);
      if (rank(ground().without(e)) < full_rank_) coloops_.insert(e);
    }
  }

  Backend backend_ = Backend::kBases;
  int size_ = 0;
  int full_rank_ = 0;
  std::vector<GraphEdge> edges_;
  std::vector<std::pair<int, int>> endpoints_;
  int vertex_count_ = 0;
  std::vector<ESet> bases_;
  std::shared_ptr<const std::vector<std::uint8_t>> rank_table_;
  ESet loops_;
  ESet coloops_;
};

/// The dual matroid, seen through rank*(S) = |S| + rank(E - S) - rank(E).
template <RankOracle M>
class DualView {
 public:
  explicit DualView(const M& primal) : primal_(&primal) {}

  int size() const { return primal_->size(); }
  ESet ground() const { return primal_->ground(); }
  int full_rank() const { return primal_->size() - primal_->full_rank(); }
  int rank(ESet s) const {
    return s.size() + primal_->rank(ground() - s) - primal_->full_rank();
  }
  const M& primal() const { return *primal_; }

 private:
  const M* primal_;
};

template <RankOracle M>
bool is_independent(const M& m, ESet s) {
  return m.rank(s) == s.size();
}

template <RankOracle M>
bool is_basis(const M& m, ESet s) {
  return s.size() == m.full_rank() && is_independent(m, s);
}

/// cl(S) = {e : rank(S + e) = rank(S)}.
template <RankOracle M>
ESet closure(const M& m, ESet s) {
  const int r = m.rank(s);
  ESet out = s;
  for (Element e : m.ground() - s) {
    if (m.rank(s.with(e)) == r) out.insert(e);
  }
  return out;
}

template <RankOracle M>
bool is_flat(const M& m, ESet s) {
  return closure(m, s) == s;
}

/// Closure in the dual matroid.
inline ESet coclosure(const Matroid& m, ESet s) {
  return closure(DualView<Matroid>(m), s);
}

inline bool is_coflat(const Matroid& m, ESet s) {
  return is_flat(DualView<Matroid>(m), s);
}

/// The unique circuit inside B + e that contains e.
template <RankOracle M>
ESet fundamental_circuit(const M& m, ESet basis, Element e) {
  if (!is_basis(m, basis)) {
    throw PreconditionError(to_string(basis) + " is not a basis");
  }
  if (basis.contains(e)) {
    throw PreconditionError("element " + std::to_string(e) +
                            " already lies in the basis");
  }
  ESet circuit = ESet::single(e);
  for (Element b : basis) {
    if (is_independent(m, basis.without(b).with(e))) circuit.insert(b);
  }
  return circuit;
}

/// The unique cocircuit inside (E - B) + e that contains e, for e in B.
inline ESet fundamental_cocircuit(const Matroid& m, ESet basis, Element e) {
  if (!basis.contains(e)) {
    throw PreconditionError("element " + std::to_string(e) +
                            " is not in the basis");
  }
  if (!is_basis(m, basis)) {
    throw PreconditionError(to_string(basis) + " is not a basis");
  }
  return fundamental_circuit(DualView<Matroid>(m), m.ground() - basis, e);
}

/// All flats F with lo ⊆ F ⊆ hi and `containing` ∈ F, sorted by the numeric
/// word order and free of duplicates. Walks the lattice upward from
/// cl(lo + containing) through covers.
template <RankOracle M>
std::vector<ESet> flats_between(const M& m, ESet lo, ESet hi,
                                Element containing) {
  if (!is_flat(m, lo)) throw PreconditionError(to_string(lo) + " is not a flat");
  if (!is_flat(m, hi)) throw PreconditionError(to_string(hi) + " is not a flat");
  std::vector<ESet> out;
  if (!lo.subset_of(hi) || !hi.contains(containing)) return out;
  const ESet start = closure(m, lo.with(containing));
  if (!start.subset_of(hi)) return out;
  std::unordered_set<ESet> seen{start};
  std::vector<ESet> stack{start};
  while (!stack.empty()) {
    const ESet f = stack.back();
    stack.pop_back();
    out.push_back(f);
    ESet tried = f;
    for (Element x : hi - f) {
      if (tried.contains(x)) continue;
      const ESet cover = closure(m, f.with(x));
      tried |= cover;
      if (cover.subset_of(hi) && seen.insert(cover).second) {
        stack.push_back(cover);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Every flat of the matroid, sorted by the numeric word order.
template <RankOracle M>
std::vector<ESet> all_flats(const M& m) {
  const ESet bottom = closure(m, ESet());
  std::vector<ESet> out{bottom};
  for (Element e : m.ground() - bottom) {
    for (ESet f : flats_between(m, bottom, m.ground(), e)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace lagrangian

#endif  // LAGRANGIAN_MATROID_HPP_
