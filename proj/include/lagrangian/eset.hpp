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

#ifndef LAGRANGIAN_ESET_HPP_
#define LAGRANGIAN_ESET_HPP_

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <vector>

namespace lagrangian {

/// An element of the ground set. The total order on the ground set is the
/// integer order.
using Element = int;

/// Largest supported ground set.
inline constexpr int kMaxElements = 64;

/// A subset of the ground set {0, ..., 63}, stored as a single machine word.
class ESet {
 public:
  using Word = std::uint64_t;

  constexpr ESet() = default;
  constexpr explicit ESet(Word bits) : bits_(bits) {}
  constexpr ESet(std::initializer_list<Element> elements) {
    for (Element e : elements) bits_ |= bit(e);
  }

  /// The set {0, ..., size-1}.
  static constexpr ESet full(int size) {
    return ESet(size >= kMaxElements ? ~Word{0} : (Word{1} << size) - 1);
  }
  static constexpr ESet single(Element e) { return ESet(bit(e)); }
  template <typename Range>
  static ESet of(const Range& elements) {
    ESet s;
    for (Element e : elements) s.insert(e);
    return s;
  }

  constexpr Word bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
  constexpr bool subset_of(ESet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ESet other) const {
    return (bits_ & other.bits_) != 0;
  }

  /// Smallest element; the set must be nonempty.
  constexpr Element min() const { return std::countr_zero(bits_); }
  /// Largest element; the set must be nonempty.
  constexpr Element max() const { return 63 - std::countl_zero(bits_); }

  constexpr void insert(Element e) { bits_ |= bit(e); }
  constexpr void erase(Element e) { bits_ &= ~bit(e); }

  constexpr ESet with(Element e) const { return ESet(bits_ | bit(e)); }
  constexpr ESet without(Element e) const { return ESet(bits_ & ~bit(e)); }
  /// Members strictly greater than e.
  constexpr ESet above(Element e) const {
    return e >= 63 ? ESet() : ESet(bits_ & (~Word{0} << (e + 1)));
  }
  /// Members strictly smaller than e.
  constexpr ESet below(Element e) const {
    return ESet(bits_ & ((Word{1} << e) - 1));
  }

  constexpr ESet operator|(ESet o) const { return ESet(bits_ | o.bits_); }
  constexpr ESet operator&(ESet o) const { return ESet(bits_ & o.bits_); }
  constexpr ESet operator-(ESet o) const { return ESet(bits_ & ~o.bits_); }
  constexpr ESet operator^(ESet o) const { return ESet(bits_ ^ o.bits_); }
  constexpr ESet& operator|=(ESet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ESet& operator&=(ESet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr ESet& operator-=(ESet o) {
    bits_ &= ~o.bits_;
    return *this;
  }

  constexpr bool operator==(const ESet&) const = default;
  /// Numeric order on the underlying word; used for hashing and maps only.
  constexpr auto operator<=>(const ESet&) const = default;

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(Word w) : w_(w) {}
    constexpr Element operator*() const { return std::countr_zero(w_); }
    constexpr iterator& operator++() {
      w_ &= w_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Word w_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> elements() const { return {begin(), end()}; }

 private:
  static constexpr Word bit(Element e) {
    if (e < 0 || e >= kMaxElements) {
      throw std::out_of_range("element outside ground set");
    }
    return Word{1} << e;
  }

  Word bits_ = 0;
};

/// Lexicographic order of the increasing element sequences of two sets.
inline bool lex_less(ESet a, ESet b) {
  auto ai = a.begin();
  auto bi = b.begin();
  for (; ai != a.end() && bi != b.end(); ++ai, ++bi) {
    if (*ai != *bi) return *ai < *bi;
  }
  return ai == a.end() && bi != b.end();
}

/// Calls fn on every subset of `universe`, in increasing numeric order.
template <typename Fn>
void for_each_subset(ESet universe, Fn&& fn) {
  const ESet::Word u = universe.bits();
  ESet::Word s = 0;
  while (true) {
    fn(ESet(s));
    if (s == u) break;
    s = (s - u) & u;
  }
}

/// Renders an element as in the usual tables: digits, then a, b, ... for 10+.
inline std::string element_label(Element e) {
  if (e < 10) return std::string(1, static_cast<char>('0' + e));
  if (e < 36) return std::string(1, static_cast<char>('a' + (e - 10)));
  return "{" + std::to_string(e) + "}";
}

/// Compact rendering of a set, e.g. "01256" or "5678b"; "∅" for the empty set
/// and "E" when the set equals `ground`.
inline std::string to_string(ESet s, ESet ground) {
  if (s.empty()) return "∅";
  if (s == ground) return "E";
  std::string out;
  for (Element e : s) out += element_label(e);
  return out;
}

inline std::string to_string(ESet s) { return to_string(s, ESet()); }

}  // namespace lagrangian

template <>
struct std::hash<lagrangian::ESet> {
  std::size_t operator()(lagrangian::ESet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif  // LAGRANGIAN_ESET_HPP_
