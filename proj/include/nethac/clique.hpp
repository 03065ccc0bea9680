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

#ifndef NETHAC_CLIQUE_HPP
#define NETHAC_CLIQUE_HPP

#include <boost/dynamic_bitset.hpp>
#include <string>
#include <vector>

#include "nethac/graph.hpp"

namespace nethac {

inline constexpr std::size_t kDefaultCliqueLimit = 64;

namespace detail {

class MaxCliqueSearch {
 public:
  using Bits = boost::dynamic_bitset<>;

  explicit MaxCliqueSearch(const Graph& g) : adj_(g.size(), Bits(g.size())) {
    for (NodeId i = 0; i < g.size(); ++i) {
      for (NodeId j : g.neighbors(i)) adj_[i].set(j);
    }
  }

  std::size_t run() {
    const std::size_t n = adj_.size();
    if (n == 0) return 0;
    Bits p(n);
    p.set();
    expand(0, p, Bits(n));
    return best_;
  }

 private:
  // Bron-Kerbosch with Tomita pivoting and a size bound.
  void expand(std::size_t depth, Bits p, Bits x) {
    if (p.none()) {
      if (x.none()) best_ = std::max(best_, depth);
      return;
    }
    if (depth + p.count() <= best_) return;
    std::size_t pivot = 0, pivot_hits = 0;
    bool have_pivot = false;
    Bits px = p | x;
    for (auto u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
      const std::size_t hits = (p & adj_[u]).count();
      if (!have_pivot || hits > pivot_hits) {
        pivot = u;
        pivot_hits = hits;
        have_pivot = true;
      }
    }
    Bits candidates = p - adj_[pivot];
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      expand(depth + 1, p & adj_[v], x & adj_[v]);
      p.reset(v);
      x.set(v);
      if (depth + p.count() <= best_) return;
    }
  }

  std::vector<Bits> adj_;
  std::size_t best_ = 0;
};

}  // namespace detail

/// Size of a maximum clique, by exact branch-and-bound. Refuses graphs with
/// more than `exact_limit` nodes.
inline std::size_t clique_number(const Graph& g, std::size_t exact_limit = kDefaultCliqueLimit) {
  if (g.size() > exact_limit) {
    throw SizeLimitExceeded("exact clique search refused: n=" + std::to_string(g.size()) +
                            " exceeds limit " + std::to_string(exact_limit));
  }
  return detail::MaxCliqueSearch(g).run();
}

}  // namespace nethac

#endif  // NETHAC_CLIQUE_HPP
