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

#ifndef NETHAC_DGP_HPP
#define NETHAC_DGP_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <span>
#include <vector>

#include "nethac/error.hpp"
#include "nethac/graph.hpp"
#include "nethac/hac.hpp"
#include "nethac/random.hpp"
#include "nethac/theta.hpp"

namespace nethac {

struct FormationSpec {
  std::size_t n = 500;
  double lambda = 1.0;
  std::uint64_t seed = 0;
};

struct FormedNetwork {
  Graph graph;
  std::vector<std::array<double, 2>> positions;
  std::vector<double> expected_degree;  // sum_j p_ij
  double pi_n = 0.0;                    // max_i sum_j p_ij
};

/// Uniform points on the unit square, independent links with
/// P(ij) = exp(-|X_i - X_j| sqrt(2 pi n / lambda)). The probability never
/// exceeds one, so no clamping is needed.
inline FormedNetwork form_network(std::size_t n, double lambda, Rng& rng) {
  detail::require(n >= 2, "form_network: n must be at least 2");
  detail::require(lambda > 0.0, "form_network: lambda must be positive");
  FormedNetwork out;
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  out.positions.resize(n);
  for (auto& p : out.positions) {
    p[0] = unif(rng);
    p[1] = unif(rng);
  }
  const double rate = std::sqrt(2.0 * std::numbers::pi * static_cast<double>(n) / lambda);
  out.expected_degree.assign(n, 0.0);
  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    const auto& xi = out.positions[i];
    for (NodeId j = i + 1; j < n; ++j) {
      const double dx = xi[0] - out.positions[j][0], dy = xi[1] - out.positions[j][1];
      const double p = std::exp(-std::sqrt(dx * dx + dy * dy) * rate);
      out.expected_degree[i] += p;
      out.expected_degree[j] += p;
      if (unif(rng) < p) edges.emplace_back(i, j);
    }
  }
  out.pi_n = *std::max_element(out.expected_degree.begin(), out.expected_degree.end());
  out.graph = Graph(n, edges);
  return out;
}

inline FormedNetwork form_network(const FormationSpec& spec) {
  Rng rng = make_rng(spec.seed);
  return form_network(spec.n, spec.lambda, rng);
}

/// Y_i = sum_m gamma^m / |N^d(i;m)| sum_{j in N^d(i;m)} eps_j.
struct LinearModelSpec {
  double gamma = 0.0;
  /// Largest lag m kept; 0 with `automatic` set means choose from gamma.
  Distance truncation = 0;
  bool automatic = true;

  /// Automatic rule: smallest m with gamma^m < 1e-12 (the BFS itself stops
  /// at the eccentricity of each node).
  Distance max_lag() const {
    detail::require(gamma >= 0.0 && gamma < 1.0, "linear model: gamma must be in [0,1)");
    if (!automatic) return truncation;
    if (gamma == 0.0) return 0;
    return static_cast<Distance>(std::ceil(std::log(1e-12) / std::log(gamma)));
  }
};

/// The linear model as an explicit sparse map Y = W eps (row-compressed).
class LinearMap {
 public:
  LinearMap(const Graph& g, double gamma, Distance max_lag) : n_(g.size()) {
    detail::require(gamma >= 0.0 && gamma < 1.0, "linear model: gamma must be in [0,1)");
    row_begin_.reserve(n_ + 1);
    row_begin_.push_back(0);
    ShellWalker walker(g);
    for (NodeId i = 0; i < n_; ++i) {
      walker.run(i, max_lag);
      double gm = 1.0;
      for (Distance m = 0; m <= walker.depth(); ++m, gm *= gamma) {
        const auto shell = walker.shell(m);
        const double w = gm / static_cast<double>(shell.size());
        if (w == 0.0) break;
        for (NodeId j : shell) {
          col_.push_back(j);
          val_.push_back(w);
        }
      }
      row_begin_.push_back(col_.size());
    }
  }

  LinearMap(const Graph& g, const LinearModelSpec& spec) : LinearMap(g, spec.gamma, spec.max_lag()) {}

  std::size_t size() const { return n_; }
  std::size_t nonzeros() const { return val_.size(); }

  void apply(std::span<const double> eps, std::span<double> y) const {
    detail::require(eps.size() == n_ && y.size() == n_, "linear map: size mismatch");
    for (std::size_t i = 0; i < n_; ++i) {
      double acc = 0.0;
      for (std::size_t k = row_begin_[i]; k < row_begin_[i + 1]; ++k) acc += val_[k] * eps[col_[k]];
      y[i] = acc;
    }
  }

  /// Column sums 1'W, so that S_n = sum_j colsum_j eps_j.
  std::vector<double> column_sums() const {
    std::vector<double> c(n_, 0.0);
    for (std::size_t k = 0; k < val_.size(); ++k) c[col_[k]] += val_[k];
    return c;
  }

  Eigen::MatrixXd dense() const {
    const auto N = static_cast<Eigen::Index>(n_);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(N, N);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = row_begin_[i]; k < row_begin_[i + 1]; ++k) w(i, col_[k]) = val_[k];
    return w;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> row_begin_;
  std::vector<NodeId> col_;
  std::vector<double> val_;
};

inline std::vector<double> standard_normal_shocks(std::size_t n, Rng& rng) {
  std::normal_distribution<double> z(0.0, 1.0);
  std::vector<double> eps(n);
  for (auto& e : eps) e = z(rng);
  return eps;
}

/// Linear model with injected shocks.
inline std::vector<double> simulate_linear(const Graph& g, const LinearModelSpec& spec, std::span<const double> eps) {
  LinearMap map(g, spec);
  std::vector<double> y(g.size());
  map.apply(eps, y);
  return y;
}

/// Linear model with fresh standard normal shocks; mean known to be 0.
inline Sample simulate_linear(const Graph& g, const LinearModelSpec& spec, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  auto eps = standard_normal_shocks(g.size(), rng);
  return Sample::scalar(simulate_linear(g, spec, eps), 0.0);
}

/// max_i |N^d(i;m)| for m = 0..diameter.
inline std::vector<std::size_t> max_shell_sizes(const Graph& g) {
  std::vector<std::size_t> out;
  ShellWalker walker(g);
  for (NodeId i = 0; i < g.size(); ++i) {
    walker.run(i);
    if (out.size() <= walker.depth()) out.resize(walker.depth() + 1, 0);
    for (Distance m = 0; m <= walker.depth(); ++m) out[m] = std::max(out[m], walker.shell_size(m));
  }
  return out;
}

/// Dependence coefficient bound for the linear model with independent
/// shocks: 2 alpha sum_{m>s} gamma^m max_i |N^d(i;m)|, alpha = E|eps|.
inline ThetaSequence theta_linear_sequence(const Graph& g, double gamma, double alpha = kStdNormalAbsMean) {
  return ThetaSequence::linear_model(gamma, max_shell_sizes(g), alpha);
}

/// The raw bound at lag s (no theta_0 = 1 masking).
inline double theta_linear_bound(const Graph& g, double gamma, Distance s, double alpha = kStdNormalAbsMean) {
  detail::require(gamma >= 0.0 && gamma < 1.0, "theta_linear_bound: gamma must be in [0,1)");
  const auto sizes = max_shell_sizes(g);
  double acc = 0.0, gm = 1.0;
  for (Distance m = 0; m < sizes.size(); ++m, gm *= gamma) {
    if (m > s) acc += gm * static_cast<double>(sizes[m]);
  }
  return 2.0 * alpha * acc;
}

/// Y_i = (eps_i + sum_{j ~ i} eps_j) / sqrt(1 + deg i). Radius-one map, so
/// Y_A and Y_B are independent once d(A,B) >= 3.
inline std::vector<double> simulate_dependency_graph(const Graph& g, std::span<const double> eps) {
  detail::require(eps.size() == g.size(), "dependency graph: shock size mismatch");
  std::vector<double> y(g.size());
  for (NodeId i = 0; i < g.size(); ++i) {
    double acc = eps[i];
    for (NodeId j : g.neighbors(i)) acc += eps[j];
    y[i] = acc / std::sqrt(1.0 + static_cast<double>(g.degree(i)));
  }
  return y;
}

inline Sample simulate_dependency_graph(const Graph& g, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  auto eps = standard_normal_shocks(g.size(), rng);
  return Sample::scalar(simulate_dependency_graph(g, eps), 0.0);
}

/// Largest distance at which two outputs of a radius-r local map can still
/// share a shock.
inline Distance dependency_radius(Distance r) { return 2 * r; }

/// Dense weight matrix of the dependency-graph map.
inline Eigen::MatrixXd dependency_graph_matrix(const Graph& g) {
  const auto N = static_cast<Eigen::Index>(g.size());
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(N, N);
  for (NodeId i = 0; i < g.size(); ++i) {
    const double c = 1.0 / std::sqrt(1.0 + static_cast<double>(g.degree(i)));
    w(i, i) = c;
    for (NodeId j : g.neighbors(i)) w(i, j) = c;
  }
  return w;
}

/// Common-shock star: hub Y = U_hub, leaves Y_i = U_hub + U_i.
inline std::vector<double> simulate_star_common_shock(std::size_t n, Rng& rng, NodeId hub = 0) {
  auto u = standard_normal_shocks(n, rng);
  std::vector<double> y(n);
  for (NodeId i = 0; i < n; ++i) y[i] = i == hub ? u[hub] : u[hub] + u[i];
  return y;
}

/// theta_s = max over output pairs (k1,k2) with d(k1,k2) >= s of
/// sum_{i,j} |D_{k1 i}| |D_{k2 j}| |Cov(eps_i, eps_j)|, for a linear map
/// phi = D eps (D constant, so the sup-norm of each derivative is |D|) and
/// shock covariance given by graph distance. Exact over all pairs; D is
/// n x n indexed by the graph's nodes.
inline ThetaSequence theta_gaussian_functional(const Graph& g, const Eigen::MatrixXd& derivative_bounds,
                                               const std::function<double(Distance)>& shock_cov,
                                               std::size_t limit = 2000) {
  const std::size_t n = g.size();
  detail::require(static_cast<std::size_t>(derivative_bounds.rows()) == n &&
                      static_cast<std::size_t>(derivative_bounds.cols()) == n,
                  "theta_gaussian_functional: derivative matrix must be n x n");
  if (n > limit) throw SizeLimitExceeded("theta_gaussian_functional: n exceeds exact pair limit");
  DistanceMatrix d(g);
  const auto N = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd c(N, N);
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j) c(i, j) = std::abs(shock_cov(d(i, j)));
  const Eigen::MatrixXd a = derivative_bounds.cwiseAbs();
  const Eigen::MatrixXd m = a * c * a.transpose();
  const Distance diam = d.diameter();
  // best[s] = max of m over pairs at distance exactly s; then suffix max
  std::vector<double> best(diam + 2, 0.0);
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j) {
      const Distance s = d(i, j);
      const std::size_t slot = s == kInfinity ? diam + 1 : s;
      best[slot] = std::max(best[slot], m(i, j));
    }
  if (best[diam + 1] > 0.0) {
    throw InvalidArgument("theta_gaussian_functional: dependence does not vanish between components");
  }
  for (std::size_t s = best.size() - 1; s-- > 0;) best[s] = std::max(best[s], best[s + 1]);
  return ThetaSequence::table(std::vector<double>(best.begin() + 1, best.end()));
}

/// Z_i = c_i' Y_i with |c_i| <= 1.
inline Sample project_vector_sample(const Sample& x, const Eigen::MatrixXd& coefficients) {
  detail::require(coefficients.rows() == x.y.rows() && coefficients.cols() == x.y.cols(),
                  "project_vector_sample: coefficients must be n x v");
  for (Eigen::Index i = 0; i < coefficients.rows(); ++i) {
    if (coefficients.row(i).norm() > 1.0 + 1e-12) {
      throw InvalidArgument("project_vector_sample: coefficient norm exceeds 1 at row " + std::to_string(i));
    }
  }
  Eigen::MatrixXd z = (x.y.cwiseProduct(coefficients)).rowwise().sum();
  std::optional<Eigen::VectorXd> mu;
  if (x.known_mean) {
    // the projected mean is row dependent; keep it only when it is constant
    Eigen::VectorXd m = coefficients * *x.known_mean;
    if ((m.array() == m(0)).all()) mu = Eigen::VectorXd::Constant(1, m(0));
  }
  return Sample(std::move(z), std::move(mu));
}

/// Observed subgraph: each edge dropped independently with probability rho.
inline Graph delete_edges(const Graph& g, double rho, Rng& rng) {
  detail::require(rho >= 0.0 && rho <= 1.0, "delete_edges: rho must be in [0,1]");
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Edge> kept;
  for (const auto& e : g.edges())
    if (!(unif(rng) < rho)) kept.push_back(e);
  return Graph(g.size(), kept);
}

inline double exact_variance_oracle(const Graph& g, const LinearModelSpec& spec) {
  return exact_variance_oracle(g, spec.gamma);
}

}  // namespace nethac

#endif  // NETHAC_DGP_HPP
