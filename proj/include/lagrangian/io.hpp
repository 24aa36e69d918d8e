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

// Readers for the two corpus formats.
//
//   .graph   lines "edge <label> <u> <v>"; labels form the range 0..n
//   .bases   a line "elements <n+1>" followed by lines "basis <e> <e> ..."
//
// Both accept '#' comments and blank lines.

#ifndef LAGRANGIAN_IO_HPP_
#define LAGRANGIAN_IO_HPP_

#include <filesystem>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lagrangian/matroid.hpp"

namespace lagrangian {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

inline int parse_int(const std::string& token, const std::string& source,
                     int line) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError(source, line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) {
    throw ParseError(source, line, "expected an integer, got '" + token + "'");
  }
  return value;
}

}  // namespace detail

inline std::vector<GraphEdge> parse_graph(std::istream& in,
                                          const std::string& source = "<graph>") {
  std::vector<GraphEdge> edges;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream words(detail::strip_comment(raw));
    std::vector<std::string> tokens;
    for (std::string t; words >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens[0] != "edge") {
      throw ParseError(source, line, "unknown directive '" + tokens[0] + "'");
    }
    if (tokens.size() != 4) {
      throw ParseError(source, line, "expected 'edge <label> <u> <v>'");
    }
    GraphEdge e{detail::parse_int(tokens[1], source, line),
                detail::parse_int(tokens[2], source, line),
                detail::parse_int(tokens[3], source, line)};
    if (e.label < 0 || e.label >= kMaxElements) {
      throw ParseError(source, line, "label out of range 0..63");
    }
    for (const GraphEdge& prev : edges) {
      if (prev.label == e.label) {
        throw ParseError(source, line,
                         "duplicate edge label " + std::to_string(e.label));
      }
    }
    edges.push_back(e);
  }
  if (edges.empty()) throw ParseError(source, line, "no edges");
  return edges;
}

struct BasesFile {
  int size = 0;
  std::vector<ESet> bases;
};

inline BasesFile parse_bases(std::istream& in,
                             const std::string& source = "<bases>") {
  BasesFile out;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::istringstream words(detail::strip_comment(raw));
    std::vector<std::string> tokens;
    for (std::string t; words >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens[0] == "elements") {
      if (tokens.size() != 2 || out.size != 0) {
        throw ParseError(source, line, "expected a single 'elements <n+1>'");
      }
      out.size = detail::parse_int(tokens[1], source, line);
      if (out.size <= 0 || out.size > kMaxElements) {
        throw ParseError(source, line, "element count must be in 1..64");
      }
    } else if (tokens[0] == "basis") {
      if (out.size == 0) {
        throw ParseError(source, line, "'basis' before 'elements'");
      }
      ESet b;
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const int e = detail::parse_int(tokens[i], source, line);
        if (e < 0 || e >= out.size) {
          throw ParseError(source, line,
                           "element " + tokens[i] + " outside the ground set");
        }
        b.insert(e);
      }
      out.bases.push_back(b);
    } else {
      throw ParseError(source, line, "unknown directive '" + tokens[0] + "'");
    }
  }
  if (out.size == 0) throw ParseError(source, line, "missing 'elements' line");
  if (out.bases.empty()) throw ParseError(source, line, "no bases");
  return out;
}

/// Loads a matroid from a .graph or .bases file, chosen by extension unless
/// `backend` is "graph" or "bases".
inline Matroid load_matroid(const std::filesystem::path& path,
                            const std::string& backend = "auto") {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string kind = backend;
  if (kind == "auto") {
    const auto ext = path.extension().string();
    if (ext == ".graph") {
      kind = "graph";
    } else if (ext == ".bases") {
      kind = "bases";
    } else {
      throw std::runtime_error("cannot infer input format of " + path.string() +
                               "; use a .graph or .bases extension");
    }
  }
  const std::string source = path.string();
  if (kind == "graph") return Matroid::from_graph(parse_graph(in, source));
  if (kind == "bases") {
    BasesFile f = parse_bases(in, source);
    return Matroid::from_bases(f.size, std::move(f.bases));
  }
  throw std::runtime_error("unknown backend '" + backend + "'");
}

}  // namespace lagrangian

#endif  // LAGRANGIAN_IO_HPP_
