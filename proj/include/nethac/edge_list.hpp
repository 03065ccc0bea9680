// Copyright 2026 The nethac Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETHAC_EDGE_LIST_HPP
#define NETHAC_EDGE_LIST_HPP

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "nethac/graph.hpp"

namespace nethac {

// Format:
//   # comment
//   n=<count>
//   i,j
// Nodes are 0-indexed. Blank lines and '#' comments are ignored anywhere.

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <class T>
T parse_number(std::string_view tok, std::size_t line_no) {
  tok = trim(tok);
  T v{};
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace detail

inline Graph read_edge_list(std::istream& in) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = line;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = detail::trim(s);
    if (s.empty()) continue;
    if (!n) {
      if (s.substr(0, 2) != "n=") throw ParseError("line " + std::to_string(line_no) + ": expected header n=<count>");
      n = detail::parse_number<std::size_t>(s.substr(2), line_no);
      continue;
    }
    auto comma = s.find(',');
    if (comma == std::string_view::npos) throw ParseError("line " + std::to_string(line_no) + ": expected i,j");
    edges.emplace_back(detail::parse_number<NodeId>(s.substr(0, comma), line_no),
                       detail::parse_number<NodeId>(s.substr(comma + 1), line_no));
  }
  if (!n) throw ParseError("edge list: missing n=<count> header");
  return Graph(*n, edges);
}

inline Graph read_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open edge list '" + path + "'");
  return read_edge_list(in);
}

/// Writes the canonical form: header, then sorted pairs with i < j.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n=" << g.size() << '\n';
  for (auto [i, j] : g.edges()) out << i << ',' << j << '\n';
}

inline void write_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write edge list '" + path + "'");
  write_edge_list(out, g);
}

}  // namespace nethac

#endif  // NETHAC_EDGE_LIST_HPP
