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

#ifndef NETHAC_GRAPH_HPP
#define NETHAC_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nethac/error.hpp"

namespace nethac {

using NodeId = std::uint32_t;
using Distance = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

/// Distance between nodes in different components.
inline constexpr Distance kInfinity = std::numeric_limits<Distance>::max();

/// Immutable undirected simple graph on nodes 0..n-1, stored as sorted
/// compressed adjacency lists.
class Graph {
 public:
  Graph() = default;

  /// Builds the graph from an edge list. Duplicate edges (in either
  /// orientation) are merged; self-loops and out-of-range endpoints throw.
  Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
    if (n > std::numeric_limits<NodeId>::max() - 1) {
      throw InvalidArgument("graph: node count too large");
    }
    std::vector<Edge> canon;
    canon.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a >= n || b >= n) {
        throw InvalidArgument("graph: edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") has an endpoint outside [0," + std::to_string(n) + ")");
      }
      if (a == b) throw InvalidArgument("graph: self-loop at node " + std::to_string(a));
      canon.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    edge_count_ = canon.size();

    offsets_.assign(n + 1, 0);
    for (auto [a, b] : canon) {
      ++offsets_[a + 1];
      ++offsets_[b + 1];
    }
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    targets_.resize(offsets_[n]);
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (auto [a, b] : canon) {
      targets_[cursor[a]++] = b;
      targets_[cursor[b]++] = a;
    }
    for (std::size_t i = 0; i < n; ++i) {
      std::sort(targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i]),
                targets_.begin() + static_cast<std::ptrdiff_t>(offsets_[i + 1]));
    }
  }

  Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n, std::span<const Edge>(edges)) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId i) const {
    return {targets_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }

  std::size_t degree(NodeId i) const { return offsets_[i + 1] - offsets_[i]; }

  bool adjacent(NodeId i, NodeId j) const {
    auto nb = neighbors(i);
    return std::binary_search(nb.begin(), nb.end(), j);
  }

  /// Canonical edge list: i < j, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (NodeId i = 0; i < n_; ++i) {
      for (NodeId j : neighbors(i)) {
        if (i < j) out.emplace_back(i, j);
      }
    }
    return out;
  }

  double average_degree() const {
    return n_ == 0 ? 0.0 : 2.0 * static_cast<double>(edge_count_) / static_cast<double>(n_);
  }

  std::size_t max_degree() const {
    std::size_t best = 0;
    for (NodeId i = 0; i < n_; ++i) best = std::max(best, degree(i));
    return best;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.offsets_ == b.offsets_ && a.targets_ == b.targets_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }
inline Graph build_graph(std::size_t n, const std::vector<Edge>& edges) { return Graph(n, edges); }

/// Reusable breadth-first layering from a single source. After run(),
/// shell(s) holds the nodes at distance exactly s, for s <= depth().
/// Distances are stamp-tagged so repeated runs cost O(visited), not O(n).
class ShellWalker {
 public:
  explicit ShellWalker(const Graph& g) : g_(&g), dist_(g.size(), kInfinity), stamp_(g.size(), 0) {
    order_.reserve(g.size());
  }

  /// BFS from `source`, stopping after layer `max_s`.
  void run(NodeId source, Distance max_s = kInfinity) {
    ++epoch_;
    if (epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
    order_.clear();
    layer_start_.clear();
    visit(source, 0);
    layer_start_.push_back(0);
    std::size_t head = 0;
    Distance level = 0;
    while (head < order_.size()) {
      const std::size_t layer_end = order_.size();
      if (level == max_s) break;
      for (; head < layer_end; ++head) {
        const NodeId u = order_[head];
        for (NodeId w : g_->neighbors(u)) {
          if (stamp_[w] != epoch_) visit(w, level + 1);
        }
      }
      if (order_.size() == layer_end) break;
      layer_start_.push_back(layer_end);
      ++level;
    }
    layer_start_.push_back(order_.size());
  }

  /// Largest s with a nonempty shell reached in the last run.
  Distance depth() const { return static_cast<Distance>(layer_start_.size() - 2); }

  std::span<const NodeId> shell(Distance s) const {
    if (s > depth()) return {};
    return {order_.data() + layer_start_[s], layer_start_[s + 1] - layer_start_[s]};
  }

  std::size_t shell_size(Distance s) const { return shell(s).size(); }

  /// |N(i;s)|, capped by what the last run reached.
  std::size_t ball_size(Distance s) const {
    return s >= depth() ? order_.size() : layer_start_[s + 1];
  }

  /// All reached nodes in nondecreasing distance order.
  std::span<const NodeId> reached() const { return order_; }

  /// Distance to j from the last source, kInfinity when not reached.
  Distance distance_to(NodeId j) const { return stamp_[j] == epoch_ ? dist_[j] : kInfinity; }

 private:
  void visit(NodeId w, Distance d) {
    stamp_[w] = epoch_;
    dist_[w] = d;
    order_.push_back(w);
  }

  const Graph* g_;
  std::vector<Distance> dist_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<NodeId> order_;
  std::vector<std::size_t> layer_start_;
};

/// Per-node partition of reachable nodes into distance shells, optionally
/// capped at distance max_s. Immutable once built.
class ShellIndex {
 public:
  ShellIndex(const Graph& g, Distance max_s = kInfinity) : max_s_(max_s) {
    const std::size_t n = g.size();
    node_begin_.reserve(n + 1);
    node_begin_.push_back(0);
    layer_begin_.reserve(n + 1);
    ShellWalker walker(g);
    for (NodeId i = 0; i < n; ++i) {
      walker.run(i, max_s);
      layer_begin_.push_back(layers_.size());
      const std::size_t base = order_.size();
      for (Distance s = 0; s <= walker.depth(); ++s) layers_.push_back(base + walker.ball_size(s));
      auto r = walker.reached();
      order_.insert(order_.end(), r.begin(), r.end());
      node_begin_.push_back(order_.size());
    }
    layer_begin_.push_back(layers_.size());
  }

  std::size_t size() const { return node_begin_.size() - 1; }
  Distance cap() const { return max_s_; }

  /// Largest nonempty shell index for node i (eccentricity within the cap).
  Distance depth(NodeId i) const {
    return static_cast<Distance>(layer_begin_[i + 1] - layer_begin_[i] - 1);
  }

  /// N^d(i;s): nodes at distance exactly s.
  std::span<const NodeId> shell(NodeId i, Distance s) const {
    if (s > depth(i)) return {};
    const std::size_t lo = s == 0 ? node_begin_[i] : layers_[layer_begin_[i] + s - 1];
    const std::size_t hi = layers_[layer_begin_[i] + s];
    return {order_.data() + lo, hi - lo};
  }

  std::size_t shell_size(NodeId i, Distance s) const { return shell(i, s).size(); }

  /// |N(i;s)| = sum of shell sizes up to s.
  std::size_t ball_size(NodeId i, Distance s) const {
    const Distance d = std::min(s, depth(i));
    return layers_[layer_begin_[i] + d] - node_begin_[i];
  }

  /// N(i;s) as a contiguous span (nodes in BFS order).
  std::span<const NodeId> ball(NodeId i, Distance s) const {
    return {order_.data() + node_begin_[i], ball_size(i, s)};
  }

 private:
  Distance max_s_;
  std::vector<std::size_t> node_begin_;
  std::vector<std::size_t> layer_begin_;
  std::vector<std::size_t> layers_;  // absolute end offset of each shell
  std::vector<NodeId> order_;
};

inline ShellIndex shells(const Graph& g, Distance max_s = kInfinity) { return ShellIndex(g, max_s); }

/// Dense all-pairs hop distances. O(n^2) memory; meant for n up to a few
/// thousand.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g) : n_(g.size()), d_(n_ * n_, kInfinity) {
    ShellWalker walker(g);
    for (NodeId i = 0; i < n_; ++i) {
      walker.run(i);
      for (Distance s = 0; s <= walker.depth(); ++s) {
        for (NodeId j : walker.shell(s)) d_[i * n_ + j] = s;
      }
    }
  }

  std::size_t size() const { return n_; }
  Distance operator()(NodeId i, NodeId j) const { return d_[static_cast<std::size_t>(i) * n_ + j]; }

  /// Largest finite distance (0 for graphs without edges).
  Distance diameter() const {
    Distance best = 0;
    for (Distance d : d_) {
      if (d != kInfinity) best = std::max(best, d);
    }
    return best;
  }

 private:
  std::size_t n_;
  std::vector<Distance> d_;
};

/// d(A,B) = min over a in A, b in B of d(a,b), via multi-source BFS from A.
inline Distance set_distance(const Graph& g, std::span<const NodeId> a, std::span<const NodeId> b) {
  if (a.empty() || b.empty()) throw InvalidArgument("set_distance: empty node set");
  const std::size_t n = g.size();
  std::vector<char> target(n, 0);
  for (NodeId j : b) {
    if (j >= n) throw InvalidArgument("set_distance: node out of range");
    target[j] = 1;
  }
  std::vector<Distance> dist(n, kInfinity);
  std::vector<NodeId> frontier;
  for (NodeId i : a) {
    if (i >= n) throw InvalidArgument("set_distance: node out of range");
    if (target[i]) return 0;
    if (dist[i] == kInfinity) {
      dist[i] = 0;
      frontier.push_back(i);
    }
  }
  std::vector<NodeId> next;
  for (Distance level = 1; !frontier.empty(); ++level) {
    next.clear();
    for (NodeId u : frontier) {
      for (NodeId w : g.neighbors(u)) {
        if (dist[w] != kInfinity) continue;
        if (target[w]) return level;
        dist[w] = level;
        next.push_back(w);
      }
    }
    frontier.swap(next);
  }
  return kInfinity;
}

inline Distance set_distance(const Graph& g, const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
  return set_distance(g, std::span<const NodeId>(a), std::span<const NodeId>(b));
}

/// Connected-component label per node, labels 0..k-1 in order of first node.
inline std::vector<std::uint32_t> component_labels(const Graph& g) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> label(g.size(), kUnset);
  std::vector<NodeId> stack;
  std::uint32_t next = 0;
  for (NodeId s = 0; s < g.size(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId u = stack.back();
      stack.pop_back();
      for (NodeId w : g.neighbors(u)) {
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

inline bool is_connected(const Graph& g) {
  if (g.size() <= 1) return true;
  auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](auto l) { return l == 0; });
}

}  // namespace nethac

#endif  // NETHAC_GRAPH_HPP
