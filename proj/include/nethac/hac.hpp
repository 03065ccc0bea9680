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

#ifndef NETHAC_HAC_HPP
#define NETHAC_HAC_HPP

#include <Eigen/Dense>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <optional>
#include <vector>

#include "nethac/error.hpp"
#include "nethac/graph.hpp"
#include "nethac/kernels.hpp"

namespace nethac {

/// n x v observations, row i = Y_i, with an optional known mean.
struct Sample {
  Eigen::MatrixXd y;
  std::optional<Eigen::VectorXd> known_mean;

  Sample() = default;
  explicit Sample(Eigen::MatrixXd data, std::optional<Eigen::VectorXd> mean = std::nullopt)
      : y(std::move(data)), known_mean(std::move(mean)) {
    validate();
  }

  /// Scalar sample from a vector of values.
  static Sample scalar(const std::vector<double>& values, std::optional<double> mean = std::nullopt) {
    Eigen::MatrixXd m(static_cast<Eigen::Index>(values.size()), 1);
    for (std::size_t i = 0; i < values.size(); ++i) m(static_cast<Eigen::Index>(i), 0) = values[i];
    std::optional<Eigen::VectorXd> mu;
    if (mean) mu = Eigen::VectorXd::Constant(1, *mean);
    return Sample(std::move(m), std::move(mu));
  }

  std::size_t n() const { return static_cast<std::size_t>(y.rows()); }
  std::size_t v() const { return static_cast<std::size_t>(y.cols()); }
  Eigen::VectorXd mean() const { return y.colwise().mean().transpose(); }

  void validate() const {
    detail::require(y.rows() >= 2, "sample: need at least two observations");
    detail::require(y.cols() >= 1, "sample: need at least one column");
    detail::require(y.allFinite(), "sample: entries must be finite");
    if (known_mean) {
      detail::require(known_mean->size() == y.cols(), "sample: known mean has wrong dimension");
      detail::require(known_mean->allFinite(), "sample: known mean must be finite");
    }
  }
};

struct HacResult {
  Eigen::MatrixXd v;
  std::vector<Eigen::MatrixXd> lag_covariances;  // index s
  std::vector<double> weights;                   // omega_n(s)
  double bandwidth = 0.0;
  bool psd = true;
  double min_eigenvalue = 0.0;
};

namespace detail {

/// Omega(s) for s = 0..max_lag on rows already centred. Stops early at the
/// largest distance present, so the result may be shorter than max_lag + 1.
inline std::vector<Eigen::MatrixXd> lag_covariances(const Graph& g, const Eigen::MatrixXd& z, Distance max_lag) {
  detail::require(static_cast<std::size_t>(z.rows()) == g.size(), "hac: sample rows must match graph size");
  const Eigen::Index v = z.cols();
  const auto n = static_cast<double>(g.size());
  std::vector<Eigen::MatrixXd> out;
  Eigen::RowVectorXd shell_sum(v);
  ShellWalker walker(g);
  for (NodeId i = 0; i < g.size(); ++i) {
    walker.run(i, max_lag);
    if (out.size() <= walker.depth()) out.resize(walker.depth() + 1, Eigen::MatrixXd::Zero(v, v));
    for (Distance s = 0; s <= walker.depth(); ++s) {
      shell_sum.setZero();
      for (NodeId j : walker.shell(s)) shell_sum += z.row(j);
      out[s].noalias() += z.row(i).transpose() * shell_sum;
    }
  }
  if (out.empty()) out.emplace_back(Eigen::MatrixXd::Zero(v, v));
  for (auto& m : out) m /= n;
  return out;
}

inline Eigen::MatrixXd centred(const Sample& x, const Eigen::VectorXd& mu) {
  return x.y.rowwise() - mu.transpose();
}

inline HacResult assemble(std::vector<Eigen::MatrixXd> lags, const KernelSpec& spec) {
  HacResult r;
  r.bandwidth = spec.bandwidth;
  const Eigen::Index v = lags.front().rows();
  r.v = Eigen::MatrixXd::Zero(v, v);
  for (std::size_t s = 0; s < lags.size(); ++s) {
    const double w = spec.weight(static_cast<Distance>(s));
    r.weights.push_back(w);
    if (w != 0.0) r.v += w * lags[s];
  }
  r.v = 0.5 * (r.v + r.v.transpose()).eval();
  if (!r.v.allFinite()) throw IndefiniteEstimate("hac: non-finite variance estimate");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r.v, Eigen::EigenvaluesOnly);
  r.min_eigenvalue = es.eigenvalues().minCoeff();
  const double scale = std::max(r.v.cwiseAbs().maxCoeff(), 1e-300);
  r.psd = r.min_eigenvalue >= -1e-12 * scale;
  r.lag_covariances = std::move(lags);
  return r;
}

}  // namespace detail

/// Omega_tilde(s) = n^-1 sum_i sum_{j in N^d(i;s)} (Y_i - L)(Y_j - L)'.
inline Eigen::MatrixXd omega_tilde(const Graph& g, const Sample& x, Distance s) {
  if (!x.known_mean) throw InvalidArgument("omega_tilde: sample has no known mean");
  auto lags = detail::lag_covariances(g, detail::centred(x, *x.known_mean), s);
  return s < lags.size() ? lags[s] : Eigen::MatrixXd::Zero(x.y.cols(), x.y.cols());
}

/// Omega_hat(s), demeaned by the sample mean.
inline Eigen::MatrixXd omega_hat(const Graph& g, const Sample& x, Distance s) {
  auto lags = detail::lag_covariances(g, detail::centred(x, x.mean()), s);
  return s < lags.size() ? lags[s] : Eigen::MatrixXd::Zero(x.y.cols(), x.y.cols());
}

/// V_tilde = sum_s omega_n(s) Omega_tilde(s), lags 0..min(floor b_n, diameter).
inline HacResult hac_known_mean(const Graph& g, const Sample& x, const KernelSpec& spec) {
  if (!x.known_mean) throw InvalidArgument("hac_known_mean: sample has no known mean");
  return detail::assemble(detail::lag_covariances(g, detail::centred(x, *x.known_mean), spec.max_lag()), spec);
}

/// V_hat = sum_s omega_n(s) Omega_hat(s).
inline HacResult hac_unknown_mean(const Graph& g, const Sample& x, const KernelSpec& spec) {
  return detail::assemble(detail::lag_covariances(g, detail::centred(x, x.mean()), spec.max_lag()), spec);
}

enum class MeanMode { known_mean, unknown_mean };

/// Same estimators on an observed subgraph; pairs the observed graph does
/// not connect are dropped.
inline HacResult hac_partial(const Graph& observed, const Sample& x, const KernelSpec& spec, MeanMode mode) {
  return mode == MeanMode::known_mean ? hac_known_mean(observed, x, spec) : hac_unknown_mean(observed, x, spec);
}

struct Interval {
  double lower = 0.0;
  double upper = 0.0;
  bool contains(double x) const { return lower <= x && x <= upper; }
};

/// Standard normal quantile.
inline double normal_quantile(double p) {
  static const boost::math::normal_distribution<double> z;
  return boost::math::quantile(z, p);
}

inline double normal_cdf(double x) {
  static const boost::math::normal_distribution<double> z;
  return boost::math::cdf(z, x);
}

/// mean +- z_{(1+level)/2} sqrt(V/n).
inline Interval confidence_interval(double mean, double variance, std::size_t n, double level = 0.95) {
  detail::require(level >= 0.0 && level < 1.0, "confidence_interval: level must be in [0,1)");
  detail::require(n >= 1, "confidence_interval: n must be positive");
  if (!(variance >= 0.0)) throw IndefiniteEstimate("indefinite HAC estimate: V = " + std::to_string(variance));
  const double z = level == 0.0 ? 0.0 : normal_quantile(0.5 * (1.0 + level));
  const double half = z * std::sqrt(variance / static_cast<double>(n));
  return {mean - half, mean + half};
}

inline Interval confidence_interval(const Sample& x, double variance, double level = 0.95) {
  detail::require(x.v() == 1, "confidence_interval: scalar sample required");
  return confidence_interval(x.mean()(0), variance, x.n(), level);
}

/// sqrt(n) (mean - null) / sqrt(V).
inline double t_statistic(double mean, double variance, std::size_t n, double null_value = 0.0) {
  if (!(variance > 0.0)) throw IndefiniteEstimate("indefinite HAC estimate: V = " + std::to_string(variance));
  return std::sqrt(static_cast<double>(n)) * (mean - null_value) / std::sqrt(variance);
}

/// True Var(S_n / sqrt n) for Y = W eps with W_ij = gamma^d(i,j) / |N^d(i;d(i,j))|
/// and independent unit-variance shocks: n^-1 ||W'1||^2.
inline double exact_variance_oracle(const Graph& g, double gamma) {
  detail::require(gamma >= 0.0 && gamma < 1.0, "exact_variance_oracle: gamma must be in [0,1)");
  const std::size_t n = g.size();
  std::vector<double> col(n, 0.0);
  ShellWalker walker(g);
  for (NodeId i = 0; i < n; ++i) {
    walker.run(i, gamma == 0.0 ? 0 : kInfinity);
    double gs = 1.0;
    for (Distance s = 0; s <= walker.depth(); ++s, gs *= gamma) {
      const auto shell = walker.shell(s);
      const double w = gs / static_cast<double>(shell.size());
      for (NodeId j : shell) col[j] += w;
    }
  }
  double acc = 0.0;
  for (double c : col) acc += c * c;
  return acc / static_cast<double>(n);
}

}  // namespace nethac

#endif  // NETHAC_HAC_HPP
