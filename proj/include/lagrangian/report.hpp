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

// Expansion reports. JSON keeps elements as integers and key order fixed, so
// parsing a report and writing it again reproduces it byte for byte. Text
// output prints elements 10, 11, ... as a, b, ....

#ifndef LAGRANGIAN_REPORT_HPP_
#define LAGRANGIAN_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "lagrangian/chow.hpp"
#include "lagrangian/conormal.hpp"
#include "lagrangian/eset.hpp"

namespace lagrangian {

using Json = nlohmann::ordered_json;

struct MatroidSummary {
  std::string source;
  int n_plus_1 = 0;
  int rank = 0;
  bool operator==(const MatroidSummary&) const = default;
};

struct Verification {
  std::int64_t expected = 0;
  std::int64_t theorem_path = 0;
  std::int64_t exhaustive = 0;
  std::int64_t extended_nbc = 0;
  bool bijective = false;
  bool passed = false;
  bool operator==(const Verification&) const = default;
};

/// One expansion: δ^power, or γ^k δ^power with power = n-k-1 when
/// `verification` is present. For a bare δ-power, k = n-1-power is the
/// γ-exponent that would complete it to top degree.
struct ExpansionReport {
  MatroidSummary matroid;
  int k = 0;
  int power = 0;
  std::vector<Biflag> monomials;
  std::vector<std::int64_t> multiplicities;
  Census census;
  std::vector<std::int64_t> expected;
  std::vector<std::int64_t> computed;
  std::optional<Verification> verification;
  bool operator==(const ExpansionReport&) const = default;
};

namespace detail {

inline Json elements_json(ESet s) {
  Json out = Json::array();
  for (Element e : s) out.push_back(e);
  return out;
}

inline ESet elements_from_json(const Json& j) {
  ESet s;
  for (const Json& e : j) {
    const int v = e.get<int>();
    if (v < 0 || v >= kMaxElements) {
      throw std::out_of_range("element " + std::to_string(v) + " out of range");
    }
    s.insert(v);
  }
  return s;
}

}  // namespace detail

inline Json to_json(const ExpansionReport& r) {
  Json out;
  out["matroid"] = {{"source", r.matroid.source},
                    {"n_plus_1", r.matroid.n_plus_1},
                    {"rank", r.matroid.rank}};
  out["k"] = r.k;
  out["power"] = r.power;
  Json monomials = Json::array();
  for (const Biflag& x : r.monomials) {
    Json chain = Json::array();
    for (const Biflat& b : x.chain()) {
      Json entry;
      entry["F"] = detail::elements_json(b.flat);
      entry["G"] = detail::elements_json(b.coflat);
      chain.push_back(std::move(entry));
    }
    monomials.push_back(std::move(chain));
  }
  out["monomials"] = std::move(monomials);
  out["multiplicities"] = r.multiplicities;
  out["census"] = {{"with_multiplicity", r.census.with_multiplicity},
                   {"distinct", r.census.distinct},
                   {"peak_frontier", r.census.peak_frontier}};
  out["h_vector_check"] = {{"expected", r.expected}, {"computed", r.computed}};
  if (r.verification) {
    const Verification& v = *r.verification;
    out["verification"] = {{"expected", v.expected},
                           {"theorem_path", v.theorem_path},
                           {"exhaustive", v.exhaustive},
                           {"extended_nbc", v.extended_nbc},
                           {"bijective", v.bijective},
                           {"passed", v.passed}};
  }
  return out;
}

inline ExpansionReport report_from_json(const Json& j) {
  ExpansionReport r;
  const Json& m = j.at("matroid");
  r.matroid = {m.at("source").get<std::string>(), m.at("n_plus_1").get<int>(),
               m.at("rank").get<int>()};
  r.k = j.at("k").get<int>();
  r.power = j.at("power").get<int>();
  for (const Json& chain : j.at("monomials")) {
    std::vector<Biflat> biflats;
    for (const Json& b : chain) {
      biflats.push_back({detail::elements_from_json(b.at("F")),
                         detail::elements_from_json(b.at("G"))});
    }
    r.monomials.emplace_back(std::move(biflats));
  }
  r.multiplicities = j.at("multiplicities").get<std::vector<std::int64_t>>();
  const Json& c = j.at("census");
  r.census.with_multiplicity =
      c.at("with_multiplicity").get<std::vector<std::int64_t>>();
  r.census.distinct = c.at("distinct").get<std::vector<std::int64_t>>();
  r.census.peak_frontier = c.at("peak_frontier").get<std::int64_t>();
  const Json& h = j.at("h_vector_check");
  r.expected = h.at("expected").get<std::vector<std::int64_t>>();
  r.computed = h.at("computed").get<std::vector<std::int64_t>>();
  if (j.contains("verification")) {
    const Json& v = j.at("verification");
    r.verification = Verification{v.at("expected").get<std::int64_t>(),
                                  v.at("theorem_path").get<std::int64_t>(),
                                  v.at("exhaustive").get<std::int64_t>(),
                                  v.at("extended_nbc").get<std::int64_t>(),
                                  v.at("bijective").get<bool>(),
                                  v.at("passed").get<bool>()};
  }
  return r;
}

/// Reports are written with two-space indentation and a trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string monomial_text(const Biflag& x, ESet ground) {
  if (x.empty()) return "1";
  std::string s;
  for (const Biflat& b : x.chain()) {
    s += "x_{" + to_string(b.flat, ground) + "|" + to_string(b.coflat, ground) +
         "}";
  }
  return s;
}

inline std::string sequence_text(const std::vector<std::int64_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

inline std::string to_text(const ExpansionReport& r) {
  const ESet ground = ESet::full(r.matroid.n_plus_1);
  std::ostringstream out;
  out << r.matroid.source << ": n+1=" << r.matroid.n_plus_1
      << " r+1=" << r.matroid.rank << "\n";
  if (r.verification) {
    const Verification& v = *r.verification;
    out << "gamma^" << r.k << " delta^" << r.power << ": expected " << v.expected
        << ", theorem path " << v.theorem_path << ", exhaustive "
        << v.exhaustive << ", extended nbc " << v.extended_nbc
        << ", bijective " << (v.bijective ? "yes" : "no") << " -> "
        << (v.passed ? "PASS" : "FAIL") << "\n";
  } else {
    out << "delta^" << r.power << ": " << r.monomials.size()
        << " distinct monomials\n";
  }
  if (!r.census.with_multiplicity.empty()) {
    out << "census with multiplicity " << sequence_text(r.census.with_multiplicity)
        << "\n";
  }
  if (!r.census.distinct.empty()) {
    out << "census distinct " << sequence_text(r.census.distinct) << "\n";
  }
  if (r.census.peak_frontier > 0) {
    out << "peak frontier " << r.census.peak_frontier << "\n";
  }
  for (std::size_t i = 0; i < r.monomials.size(); ++i) {
    out << "  ";
    if (r.multiplicities[i] != 1) out << r.multiplicities[i] << " ";
    out << monomial_text(r.monomials[i], ground) << "\n";
  }
  return out.str();
}

}  // namespace lagrangian

#endif  // LAGRANGIAN_REPORT_HPP_
