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

#ifndef NETHAC_KERNELS_HPP
#define NETHAC_KERNELS_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nethac/error.hpp"
#include "nethac/graph.hpp"

namespace nethac {

enum class KernelFamily { parzen, bartlett, truncated, tukey_hanning };

inline std::string_view to_string(KernelFamily f) {
  switch (f) {
    case KernelFamily::parzen: return "parzen";
    case KernelFamily::bartlett: return "bartlett";
    case KernelFamily::truncated: return "truncated";
    case KernelFamily::tukey_hanning: return "tukey-hanning";
  }
  return "?";
}

inline KernelFamily parse_kernel(std::string_view name) {
  if (name == "parzen") return KernelFamily::parzen;
  if (name == "bartlett") return KernelFamily::bartlett;
  if (name == "truncated") return KernelFamily::truncated;
  if (name == "tukey-hanning" || name == "tukey_hanning") return KernelFamily::tukey_hanning;
  throw InvalidArgument("unknown kernel '" + std::string(name) + "'");
}

/// omega(x). Symmetric, omega(0) = 1, zero outside [-1,1] and at +-inf.
inline double kernel_eval(KernelFamily f, double x) {
  if (std::isnan(x)) throw InvalidArgument("kernel_eval: NaN argument");
  const double a = std::abs(x);
  if (a > 1.0) return 0.0;  // covers infinity
  switch (f) {
    case KernelFamily::parzen:
      if (a <= 0.5) return 1.0 - 6.0 * a * a + 6.0 * a * a * a;
      return 2.0 * (1.0 - a) * (1.0 - a) * (1.0 - a);
    case KernelFamily::bartlett: return 1.0 - a;
    case KernelFamily::truncated: return 1.0;
    case KernelFamily::tukey_hanning: return 0.5 * (1.0 + std::cos(std::numbers::pi * a));
  }
  return 0.0;
}

/// 1 - omega(x) without cancellation near 0.
inline double kernel_one_minus(KernelFamily f, double x) {
  const double a = std::abs(x);
  if (a > 1.0) return 1.0;
  switch (f) {
    case KernelFamily::parzen:
      if (a <= 0.5) return 6.0 * a * a * (1.0 - a);
      return 1.0 - 2.0 * (1.0 - a) * (1.0 - a) * (1.0 - a);
    case KernelFamily::bartlett: return a;
    case KernelFamily::truncated: return 0.0;
    case KernelFamily::tukey_hanning: {
      const double h = std::sin(0.5 * std::numbers::pi * a);
      return h * h;
    }
  }
  return 0.0;
}

/// Kernel family together with a bandwidth b_n. Weights are omega(s / b_n);
/// b_n = 0 keeps only lag 0.
struct KernelSpec {
  KernelFamily family = KernelFamily::parzen;
  double bandwidth = 1.0;

  double weight(Distance s) const {
    if (s == kInfinity) return 0.0;
    if (s == 0) return 1.0;
    if (bandwidth <= 0.0) return 0.0;
    return kernel_eval(family, static_cast<double>(s) / bandwidth);
  }

  /// Last lag with possibly nonzero weight.
  Distance max_lag() const {
    if (!(bandwidth > 0.0)) return 0;
    const double f = std::floor(bandwidth);
    return f >= static_cast<double>(kInfinity - 1) ? kInfinity - 1 : static_cast<Distance>(f);
  }
};

/// b_n = constant * log n / log(avg_degree v (1 + epsilon)), natural log.
struct BandwidthRule {
  double constant = 2.0;
  double epsilon = 0.05;
};

inline double bandwidth(const BandwidthRule& rule, std::size_t n, double avg_degree) {
  detail::require(n >= 2, "bandwidth: n must be at least 2");
  detail::require(rule.epsilon > 0.0 && rule.constant >= 0.0, "bandwidth: need epsilon > 0 and constant >= 0");
  return rule.constant * std::log(static_cast<double>(n)) / std::log(std::max(avg_degree, 1.0 + rule.epsilon));
}

/// sup over a grid on (0,1] of |omega(x) - 1| / x^(1+eta).
struct RegularityResult {
  double c_estimate = 0.0;
  bool violation = false;
  double argmax = 0.0;
};

inline constexpr double kRegularityViolation = 1e6;

inline RegularityResult kernel_regularity(KernelFamily f, double eta, std::size_t grid = 100000) {
  detail::require(eta > 0.0, "kernel_regularity: eta must be positive");
  detail::require(grid >= 2, "kernel_regularity: grid too small");
  // log-spaced down to 1e-150 so that x^-eta blow-ups become visible while
  // x^2 stays a normal double
  RegularityResult r;
  const double lo = std::log(1e-150);
  for (std::size_t t = 0; t < grid; ++t) {
    const double x = std::exp(lo * (1.0 - static_cast<double>(t) / static_cast<double>(grid - 1)));
    const double gap = std::abs(kernel_one_minus(f, x));
    const double ratio = gap == 0.0 ? 0.0 : std::exp(std::log(gap) - (1.0 + eta) * std::log(x));
    if (ratio > r.c_estimate) {
      r.c_estimate = ratio;
      r.argmax = x;
    }
  }
  r.violation = !(r.c_estimate <= kRegularityViolation);
  return r;
}

inline constexpr std::size_t kDenseMatrixLimit = 5000;

/// W = [omega(d(i,j) / b_n)], with 0 for disconnected pairs.
inline Eigen::MatrixXd weight_matrix(const Graph& g, const KernelSpec& spec, std::size_t limit = kDenseMatrixLimit) {
  const std::size_t n = g.size();
  if (n > limit) throw SizeLimitExceeded("weight_matrix: n=" + std::to_string(n) + " exceeds dense limit " + std::to_string(limit));
  const auto N = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(N, N);
  ShellWalker walker(g);
  for (NodeId i = 0; i < n; ++i) {
    walker.run(i, spec.max_lag());
    for (Distance s = 0; s <= walker.depth(); ++s) {
      const double v = spec.weight(s);
      for (NodeId j : walker.shell(s)) {
        if (j < i) continue;  // one evaluation per unordered pair
        w(i, j) = v;
        w(j, i) = v;
      }
    }
  }
  return w;
}

struct PsdResult {
  bool psd = true;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
};

/// Smallest eigenvalue test; default tolerance 1e-9 * ||W||_inf.
inline PsdResult psd_check(const Eigen::MatrixXd& w, std::optional<double> tol = std::nullopt) {
  detail::require(w.rows() == w.cols(), "psd_check: matrix must be square");
  if (w.rows() == 0) return {};
  const double scale = w.cwiseAbs().rowwise().sum().maxCoeff();
  if ((w - w.transpose()).cwiseAbs().maxCoeff() > 1e-12 * std::max(scale, 1.0)) {
    throw InvalidArgument("psd_check: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(w, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw Error("psd_check: eigensolver did not converge");
  PsdResult r;
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  r.tolerance = tol.value_or(1e-9 * scale);
  r.psd = r.min_eigenvalue >= -r.tolerance;
  return r;
}

struct ChordSearchResult {
  bool found = false;
  Edge chord{0, 0};
  double min_eigenvalue = 0.0;
};

/// Adds each absent edge to `base` in turn and reports the first (in
/// lexicographic order) whose weight matrix is indefinite.
inline ChordSearchResult find_indefinite_chord(const Graph& base, const KernelSpec& spec) {
  auto edges = base.edges();
  for (NodeId i = 0; i < base.size(); ++i) {
    for (NodeId j = i + 1; j < base.size(); ++j) {
      if (base.adjacent(i, j)) continue;
      auto e = edges;
      e.emplace_back(i, j);
      auto r = psd_check(weight_matrix(Graph(base.size(), e), spec));
      if (!r.psd) return {true, {i, j}, r.min_eigenvalue};
    }
  }
  return {};
}

}  // namespace nethac

#endif  // NETHAC_KERNELS_HPP
