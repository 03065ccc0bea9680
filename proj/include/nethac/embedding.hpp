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

#ifndef NETHAC_EMBEDDING_HPP
#define NETHAC_EMBEDDING_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "nethac/clique.hpp"
#include "nethac/graph.hpp"
#include "nethac/random.hpp"

namespace nethac {

enum class SpaceKind { euclidean, linf, sphere };

/// Target metric space: R^k with the Euclidean or sup norm, or the unit
/// k-sphere in R^(k+1) with great-circle distance.
struct MetricSpace {
  SpaceKind kind = SpaceKind::euclidean;
  std::size_t dim = 2;
};

/// Maximum number of mutually equidistant points. For the sup norm this is
/// 2^k, which is also the general upper bound for k-dimensional normed
/// spaces.
inline std::size_t equilateral_dimension(const MetricSpace& space) {
  switch (space.kind) {
    case SpaceKind::euclidean: return space.dim + 1;
    case SpaceKind::linf: return std::size_t{1} << space.dim;
    case SpaceKind::sphere: return space.dim + 2;
  }
  return 0;
}

struct EmbeddingDiagnostic {
  std::size_t clique_number = 0;
  std::size_t equilateral_dim = 0;
  bool necessary_condition_holds = false;
  /// Best max |d_X(b(i),b(j)) - d(i,j)| found; evidence, not a certificate.
  double min_stress = 0.0;
};

struct StressSearchOptions {
  std::size_t restarts = 200;
  std::size_t max_sweeps = 400;
  double exact_tolerance = 1e-9;
  std::uint64_t seed = 0x5eed;
};

namespace detail {

class StressSearch {
 public:
  StressSearch(const Graph& g, const MetricSpace& space)
      : n_(g.size()), space_(space), dist_(g), coords_(space.kind == SpaceKind::sphere ? space.dim + 1 : space.dim) {
    diameter_ = std::max<double>(1.0, dist_.diameter());
  }

  double run(const StressSearchOptions& opt) {
    Rng rng = make_rng(opt.seed);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t r = 0; r < opt.restarts && best > opt.exact_tolerance; ++r) {
      randomize(rng);
      descend(opt.max_sweeps, false);
      descend(opt.max_sweeps, true);
      best = std::min(best, max_distortion());
    }
    return best <= opt.exact_tolerance ? 0.0 : best;
  }

 private:
  double* point(std::size_t i) { return x_.data() + i * coords_; }
  const double* point(std::size_t i) const { return x_.data() + i * coords_; }

  void randomize(Rng& rng) {
    x_.assign(n_ * coords_, 0.0);
    if (space_.kind == SpaceKind::sphere) {
      std::normal_distribution<double> z;
      for (double& v : x_) v = z(rng);
    } else {
      std::uniform_real_distribution<double> u(0.0, diameter_);
      for (double& v : x_) v = u(rng);
    }
  }

  double metric(const double* a, const double* b) const {
    switch (space_.kind) {
      case SpaceKind::euclidean: {
        double s = 0;
        for (std::size_t c = 0; c < coords_; ++c) s += (a[c] - b[c]) * (a[c] - b[c]);
        return std::sqrt(s);
      }
      case SpaceKind::linf: {
        double s = 0;
        for (std::size_t c = 0; c < coords_; ++c) s = std::max(s, std::abs(a[c] - b[c]));
        return s;
      }
      case SpaceKind::sphere: {
        double dot = 0, na = 0, nb = 0;
        for (std::size_t c = 0; c < coords_; ++c) {
          dot += a[c] * b[c];
          na += a[c] * a[c];
          nb += b[c] * b[c];
        }
        const double denom = std::sqrt(na * nb);
        if (denom == 0) return 0;
        return std::acos(std::clamp(dot / denom, -1.0, 1.0));
      }
    }
    return 0;
  }

  double pair_error(std::size_t i, std::size_t j) const {
    return metric(point(i), point(j)) - static_cast<double>(dist_(static_cast<NodeId>(i), static_cast<NodeId>(j)));
  }

  double max_distortion() const {
    double m = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) m = std::max(m, std::abs(pair_error(i, j)));
    return m;
  }

  // Objective restricted to the terms that involve node i, plus a constant
  // floor for the max criterion.
  double node_objective(std::size_t i, bool use_max, double floor) const {
    double acc = use_max ? floor : 0.0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (j == i) continue;
      const double e = pair_error(i, j);
      acc = use_max ? std::max(acc, std::abs(e)) : acc + e * e;
    }
    return acc;
  }

  double rest_max(std::size_t i) const {
    double m = 0;
    for (std::size_t a = 0; a < n_; ++a) {
      if (a == i) continue;
      for (std::size_t b = a + 1; b < n_; ++b) {
        if (b == i) continue;
        m = std::max(m, std::abs(pair_error(a, b)));
      }
    }
    return m;
  }

  // Scan-then-golden line search on one coordinate; keeps the move only
  // when it improves the objective.
  bool line_search(double& x, double h, const std::function<double()>& f) {
    const double x0 = x;
    const double f0 = f();
    constexpr int kScan = 12;
    double best_t = x0, best_f = f0;
    for (int k = 0; k <= kScan; ++k) {
      x = x0 - h + 2.0 * h * k / kScan;
      const double v = f();
      if (v < best_f) {
        best_f = v;
        best_t = x;
      }
    }
    double lo = best_t - 2.0 * h / kScan, hi = best_t + 2.0 * h / kScan;
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = hi - phi * (hi - lo), b = lo + phi * (hi - lo);
    x = a;
    double fa = f();
    x = b;
    double fb = f();
    for (int it = 0; it < 80 && hi - lo > 1e-14 * (1.0 + std::abs(best_t)); ++it) {
      if (fa < fb) {
        hi = b;
        b = a;
        fb = fa;
        a = hi - phi * (hi - lo);
        x = a;
        fa = f();
      } else {
        lo = a;
        a = b;
        fa = fb;
        b = lo + phi * (hi - lo);
        x = b;
        fb = f();
      }
    }
    if (fa < best_f) {
      best_f = fa;
      best_t = a;
    }
    if (fb < best_f) {
      best_f = fb;
      best_t = b;
    }
    x = best_t;
    return best_f < f0;
  }

  void descend(std::size_t max_sweeps, bool use_max) {
    double h = diameter_ / 2.0;
    for (std::size_t sweep = 0; sweep < max_sweeps && h > 1e-13; ++sweep) {
      bool improved = false;
      for (std::size_t i = 0; i < n_; ++i) {
        const double floor = use_max ? rest_max(i) : 0.0;
        for (std::size_t c = 0; c < coords_; ++c) {
          double& coord = point(i)[c];
          improved |= line_search(coord, h, [&] { return node_objective(i, use_max, floor); });
        }
      }
      if (!improved) h /= 2.0;
    }
  }

  std::size_t n_;
  MetricSpace space_;
  DistanceMatrix dist_;
  std::size_t coords_;
  double diameter_ = 1.0;
  std::vector<double> x_;
};

}  // namespace detail

/// Clique-number necessary condition for isometric embedding plus a
/// numeric search for the least-distorting placement.
inline EmbeddingDiagnostic embedding_check(const Graph& g, const MetricSpace& space,
                                           const StressSearchOptions& options = {}) {
  if (!is_connected(g)) throw InvalidArgument("embedding_check: graph must be connected");
  detail::require(space.dim >= 1, "embedding_check: dimension must be positive");
  EmbeddingDiagnostic out;
  out.clique_number = clique_number(g);
  out.equilateral_dim = equilateral_dimension(space);
  out.necessary_condition_holds = out.clique_number <= out.equilateral_dim;
  out.min_stress = g.size() <= 1 ? 0.0 : detail::StressSearch(g, space).run(options);
  return out;
}

}  // namespace nethac

#endif  // NETHAC_EMBEDDING_HPP
