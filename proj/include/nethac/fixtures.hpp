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

#ifndef NETHAC_FIXTURES_HPP
#define NETHAC_FIXTURES_HPP

#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "nethac/graph.hpp"

namespace nethac::fixtures {

inline Graph ring(std::size_t n) {
  detail::require(n >= 3, "ring: need n >= 3");
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i) e.emplace_back(i, static_cast<NodeId>((i + 1) % n));
  return Graph(n, e);
}

/// Star with hub 0.
inline Graph star(std::size_t n) {
  detail::require(n >= 2, "star: need n >= 2");
  std::vector<Edge> e;
  for (NodeId i = 1; i < n; ++i) e.emplace_back(0, i);
  return Graph(n, e);
}

inline Graph path(std::size_t n) {
  detail::require(n >= 1, "path: need n >= 1");
  std::vector<Edge> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph complete(std::size_t n) {
  std::vector<Edge> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, e);
}

inline Graph edgeless(std::size_t n) { return Graph(n, std::vector<Edge>{}); }

/// w-by-h grid, node (x,y) -> y*w + x.
inline Graph lattice(std::size_t w, std::size_t h) {
  detail::require(w >= 1 && h >= 1, "lattice: need positive dimensions");
  std::vector<Edge> e;
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const auto id = static_cast<NodeId>(y * w + x);
      if (x + 1 < w) e.emplace_back(id, id + 1);
      if (y + 1 < h) e.emplace_back(id, static_cast<NodeId>(id + w));
    }
  }
  return Graph(w * h, e);
}

/// Four-node cycle drawn as the path 1-2-3 with node 4 tied to 1 and 3
/// (0-indexed here). Clique number 2, yet not isometrically embeddable
/// in the Euclidean plane.
inline Graph fig1() { return Graph(4, std::vector<Edge>{{0, 1}, {1, 2}, {3, 0}, {3, 2}}); }

/// 4-clique on nodes 1..4, node 5 tied to 2, node 6 tied to 4, and 5-6
/// adjacent (0-indexed here). Clique number 4 but not embeddable in the
/// plane with the L-infinity metric.
inline Graph fig2() {
  return Graph(6, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 1}, {5, 3}, {4, 5}});
}

namespace detail {

inline std::vector<std::size_t> parse_args(std::string_view name, std::string_view spec) {
  std::vector<std::size_t> out;
  auto open = spec.find('(');
  auto close = spec.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
    throw InvalidArgument("fixture: expected arguments for '" + std::string(name) + "'");
  }
  std::string_view args = spec.substr(open + 1, close - open - 1);
  while (!args.empty()) {
    auto comma = args.find(',');
    std::string_view tok = args.substr(0, comma);
    while (!tok.empty() && tok.front() == ' ') tok.remove_prefix(1);
    while (!tok.empty() && tok.back() == ' ') tok.remove_suffix(1);
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
      throw InvalidArgument("fixture: bad argument '" + std::string(tok) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    args.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

/// Named fixture lookup: ring(n), star(n), path(n), complete(n),
/// lattice(w,h), fig1, fig2.
inline Graph fixture(std::string_view spec) {
  const auto name = spec.substr(0, spec.find('('));
  auto args = [&](std::size_t count) {
    auto a = detail::parse_args(name, spec);
    if (a.size() != count) throw InvalidArgument("fixture: wrong argument count for '" + std::string(name) + "'");
    return a;
  };
  if (name == "fig1") return fig1();
  if (name == "fig2") return fig2();
  if (name == "ring") return ring(args(1)[0]);
  if (name == "star") return star(args(1)[0]);
  if (name == "path") return path(args(1)[0]);
  if (name == "complete") return complete(args(1)[0]);
  if (name == "lattice") {
    auto a = args(2);
    return lattice(a[0], a[1]);
  }
  throw InvalidArgument("fixture: unknown name '" + std::string(spec) + "'");
}

}  // namespace nethac::fixtures

#endif  // NETHAC_FIXTURES_HPP
