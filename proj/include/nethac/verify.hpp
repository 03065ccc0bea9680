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

#ifndef NETHAC_VERIFY_HPP
#define NETHAC_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "nethac/dgp.hpp"
#include "nethac/error.hpp"
#include "nethac/graph.hpp"
#include "nethac/hac.hpp"
#include "nethac/netstats.hpp"
#include "nethac/parallel.hpp"
#include "nethac/random.hpp"

namespace nethac {

struct CovBoundInputs {
  double mu_xi = 1.0;    // ||xi||_{p}
  double mu_zeta = 1.0;  // ||zeta||_{q}
  double p = 8.0;
  double q = 8.0;
  double theta = 0.0;
  double psi_bar = 0.0;
};

namespace detail {

inline void check_orders(double p, double q) {
  require(p > 1.0 && q > 1.0, "covariance bound: p and q must exceed 1");
  require(1.0 / p + 1.0 / q < 1.0, "covariance bound: need 1/p + 1/q < 1");
}

/// theta_under^(1 - 1/p - 1/q) with theta_under = min(theta, 1).
inline double small_theta_power(double theta, double p, double q) {
  return pow0(std::min(theta, 1.0), 1.0 - 1.0 / p - 1.0 / q);
}

}  // namespace detail

/// (max(theta,1) psi_bar + 16 mu_xi mu_zeta) min(theta,1)^(1 - 1/p - 1/q).
inline double cov_bound_a1(const CovBoundInputs& in) {
  detail::check_orders(in.p, in.q);
  detail::require(in.mu_xi >= 0.0 && in.mu_zeta >= 0.0 && in.theta >= 0.0 && in.psi_bar >= 0.0,
                  "cov_bound_a1: inputs must be nonnegative");
  return (std::max(in.theta, 1.0) * in.psi_bar + 16.0 * in.mu_xi * in.mu_zeta) *
         detail::small_theta_power(in.theta, in.p, in.q);
}

struct ProductBoundInputs {
  double theta = 0.0;
  double p = 8.0;
  double q = 8.0;
  double a = 1.0;
  double b = 1.0;
  double pi1 = 1.0;
  double pi2 = 1.0;
  double gamma1 = 1.0;
  double gamma2 = 1.0;
  double c = 1.0;
};

/// 2 max(theta,1) (C+16) ab (pi1+g1)(pi2+g2) min(theta,1)^(1 - 1/p - 1/q).
inline double cov_bound_product(const ProductBoundInputs& in) {
  detail::check_orders(in.p, in.q);
  detail::require(in.theta >= 0.0 && in.c >= 0.0, "cov_bound_product: theta and C must be nonnegative");
  return 2.0 * std::max(in.theta, 1.0) * (in.c + 16.0) * in.a * in.b * (in.pi1 + in.gamma1) * (in.pi2 + in.gamma2) *
         detail::small_theta_power(in.theta, in.p, in.q);
}

/// psi_{a,b}(f,g) = C ab (||f||_inf + Lip f)(||g||_inf + Lip g).
inline double psi_lipschitz(double c, double a, double b, double f_sup, double f_lip, double g_sup, double g_lip) {
  return c * a * b * (f_sup + f_lip) * (g_sup + g_lip);
}

/// Data-generating processes the diagnostics can drive.
struct DgpKind {
  enum class Kind { linear_model, dependency_graph, star_common_shock } kind = Kind::linear_model;
  double gamma = 0.0;

  static DgpKind linear(double gamma) { return {Kind::linear_model, gamma}; }
  static DgpKind dependency() { return {Kind::dependency_graph, 0.0}; }
  static DgpKind star_shock() { return {Kind::star_common_shock, 0.0}; }
};

/// Draws Y on a fixed graph; the map is built once and reused.
class DgpSampler {
 public:
  DgpSampler(const Graph& g, const DgpKind& kind) : g_(&g), kind_(kind) {
    if (kind.kind == DgpKind::Kind::linear_model) map_.emplace(g, LinearModelSpec{kind.gamma});
  }

  void draw(Rng& rng, std::vector<double>& y) const {
    y.resize(g_->size());
    switch (kind_.kind) {
      case DgpKind::Kind::linear_model: {
        auto eps = standard_normal_shocks(g_->size(), rng);
        map_->apply(eps, y);
        break;
      }
      case DgpKind::Kind::dependency_graph: {
        auto eps = standard_normal_shocks(g_->size(), rng);
        y = simulate_dependency_graph(*g_, eps);
        break;
      }
      case DgpKind::Kind::star_common_shock: y = simulate_star_common_shock(g_->size(), rng); break;
    }
  }

  /// Exact Var(S_n) where available (linear and dependency-graph maps).
  double var_sum() const {
    switch (kind_.kind) {
      case DgpKind::Kind::linear_model: {
        double acc = 0.0;
        for (double c : map_->column_sums()) acc += c * c;
        return acc;
      }
      case DgpKind::Kind::dependency_graph: {
        std::vector<double> col(g_->size(), 0.0);
        for (NodeId i = 0; i < g_->size(); ++i) {
          const double c = 1.0 / std::sqrt(1.0 + static_cast<double>(g_->degree(i)));
          col[i] += c;
          for (NodeId j : g_->neighbors(i)) col[j] += c;
        }
        double acc = 0.0;
        for (double c : col) acc += c * c;
        return acc;
      }
      case DgpKind::Kind::star_common_shock: {
        // S = n U_hub + sum_{leaves} U_i
        const double n = static_cast<double>(g_->size());
        return n * n + (n - 1.0);
      }
    }
    return 0.0;
  }

 private:
  const Graph* g_;
  DgpKind kind_;
  std::optional<LinearMap> map_;
};

struct LimitDiagnostics {
  std::size_t reps = 0;
  double l1_deviation = 0.0;  // E|n^-1 sum (Y_i - EY_i)|
  double l1_se = 0.0;
  double l1_tanh = 0.0;       // same for tanh(Y_i), whose mean is 0 by symmetry
  double l1_tanh_se = 0.0;
  double ks_statistic = 0.0;
  double ks_critical = 0.0;   // 1.358 / sqrt(reps)
  double sigma_n2 = 0.0;      // Var(S_n)
};

namespace detail {

inline std::pair<double, double> mean_se(std::span<const double> x) {
  const auto n = static_cast<double>(x.size());
  const double m = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : x) ss += (v - m) * (v - m);
  return {m, x.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0};
}

}  // namespace detail

/// sup_t |F_reps(t) - Phi(t)| over the sorted values.
inline double ks_statistic(std::vector<double> z) {
  detail::require(!z.empty(), "ks_statistic: empty sample");
  std::sort(z.begin(), z.end());
  const auto n = static_cast<double>(z.size());
  double d = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double f = normal_cdf(z[i]);
    d = std::max({d, (static_cast<double>(i) + 1.0) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

inline double ks_critical_95(std::size_t reps) { return 1.358 / std::sqrt(static_cast<double>(reps)); }

/// Monte Carlo estimate of E|mean deviation| for the identity and tanh.
/// All supported processes have zero mean and symmetric marginals.
inline LimitDiagnostics lln_diagnostic(const Graph& g, const DgpKind& kind, std::size_t reps, std::uint64_t seed,
                                       std::size_t workers = 1) {
  detail::require(reps >= 100, "lln_diagnostic: need at least 100 replications");
  DgpSampler sampler(g, kind);
  std::vector<double> dev(reps), dev_tanh(reps);
  parallel_for(reps, workers, [&](std::size_t r) {
    Rng rng = make_rng(derive_seed(seed, {r}));
    std::vector<double> y;
    sampler.draw(rng, y);
    double s = 0.0, st = 0.0;
    for (double v : y) {
      s += v;
      st += std::tanh(v);
    }
    dev[r] = std::abs(s / static_cast<double>(y.size()));
    dev_tanh[r] = std::abs(st / static_cast<double>(y.size()));
  });
  LimitDiagnostics out;
  out.reps = reps;
  std::tie(out.l1_deviation, out.l1_se) = detail::mean_se(dev);
  std::tie(out.l1_tanh, out.l1_tanh_se) = detail::mean_se(dev_tanh);
  out.sigma_n2 = sampler.var_sum();
  return out;
}

/// KS distance of S_n / sigma_n from the standard normal across replications
/// on a fixed network, sigma_n exact.
inline LimitDiagnostics clt_diagnostic(const Graph& g, const DgpKind& kind, std::size_t reps, std::uint64_t seed,
                                       std::size_t workers = 1) {
  detail::require(reps >= 1, "clt_diagnostic: need replications");
  DgpSampler sampler(g, kind);
  LimitDiagnostics out;
  out.reps = reps;
  out.sigma_n2 = sampler.var_sum();
  if (!(out.sigma_n2 > 0.0)) throw InvalidArgument("clt_diagnostic: sigma_n is zero");
  const double sigma = std::sqrt(out.sigma_n2);
  std::vector<double> z(reps);
  parallel_for(reps, workers, [&](std::size_t r) {
    Rng rng = make_rng(derive_seed(seed, {r}));
    std::vector<double> y;
    sampler.draw(rng, y);
    z[r] = std::accumulate(y.begin(), y.end(), 0.0) / sigma;
  });
  out.ks_statistic = ks_statistic(z);
  out.ks_critical = ks_critical_95(reps);
  return out;
}

/// Network drawn once from the formation model, then conditioned on.
inline LimitDiagnostics clt_diagnostic(const FormationSpec& net, const DgpKind& kind, std::size_t reps,
                                       std::uint64_t seed, std::size_t workers = 1) {
  auto formed = form_network(net);
  return clt_diagnostic(formed.graph, kind, reps, seed, workers);
}

/// One row of the empirical psi-bound check.
struct PsiCheckRow {
  Distance s = 0;
  double cov = 0.0;     // MC Cov(f(Y_A), g(Y_B))
  double cov_se = 0.0;
  double theta = 0.0;   // linear-model bound at s
  double psi = 0.0;     // with C = 1
  double bound = 0.0;   // psi * theta
  bool violated = false;  // cov exceeds bound by more than 3 se
  double c_needed = 0.0;  // smallest C with |cov| <= C-scaled bound
};

struct PsiCheckResult {
  std::vector<PsiCheckRow> rows;
  double c_needed = 0.0;
  bool any_violation = false;
};

/// Linear model on `g`, A = {0}, B = {node at distance s from 0},
/// f = tanh, g = clip to [-1,1]; both have sup norm 1 and Lipschitz
/// constant 1, so psi = 4 C.
inline PsiCheckResult psi_bound_check(const Graph& g, double gamma, std::span<const Distance> lags, std::size_t reps,
                                      std::uint64_t seed, std::size_t workers = 1) {
  detail::require(reps >= 2, "psi_bound_check: need replications");
  ShellWalker walker(g);
  walker.run(0);
  std::vector<NodeId> partner;
  for (Distance s : lags) {
    auto shell = walker.shell(s);
    if (shell.empty()) throw InvalidArgument("psi_bound_check: no node at distance " + std::to_string(s) + " from 0");
    partner.push_back(*std::min_element(shell.begin(), shell.end()));
  }
  LinearMap map(g, LinearModelSpec{gamma});
  const std::size_t k = lags.size();
  std::vector<double> fa(reps), gb(reps * k);
  parallel_for(reps, workers, [&](std::size_t r) {
    Rng rng = make_rng(derive_seed(seed, {r}));
    auto eps = standard_normal_shocks(g.size(), rng);
    std::vector<double> y(g.size());
    map.apply(eps, y);
    fa[r] = std::tanh(y[0]);
    for (std::size_t t = 0; t < k; ++t) gb[r * k + t] = std::clamp(y[partner[t]], -1.0, 1.0);
  });
  PsiCheckResult out;
  const double psi = psi_lipschitz(1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0);
  const auto n = static_cast<double>(reps);
  const double mf = std::accumulate(fa.begin(), fa.end(), 0.0) / n;
  for (std::size_t t = 0; t < k; ++t) {
    double mg = 0.0;
    for (std::size_t r = 0; r < reps; ++r) mg += gb[r * k + t];
    mg /= n;
    std::vector<double> prod(reps);
    for (std::size_t r = 0; r < reps; ++r) prod[r] = (fa[r] - mf) * (gb[r * k + t] - mg);
    auto [cov, se] = detail::mean_se(prod);
    PsiCheckRow row;
    row.s = lags[t];
    row.cov = cov * n / (n - 1.0);
    row.cov_se = se;
    row.theta = theta_linear_bound(g, gamma, lags[t]);
    row.psi = psi;
    row.bound = psi * row.theta;
    row.violated = std::abs(row.cov) > row.bound + 3.0 * row.cov_se;
    row.c_needed = row.theta > 0.0 ? std::abs(row.cov) / (4.0 * row.theta) : (row.cov == 0.0 ? 0.0 : INFINITY);
    out.c_needed = std::max(out.c_needed, row.c_needed);
    out.any_violation = out.any_violation || row.violated;
    out.rows.push_back(row);
  }
  return out;
}


/// Outcome of the product-moment bound check.
struct ProductCheckResult {
  Distance s = 0;
  double cov = 0.0;
  double cov_se = 0.0;
  double theta = 0.0;
  double bound = 0.0;
  bool violated = false;
};

namespace detail {

/// ||Z||_r for a standard normal Z: (2^{r/2} Gamma((r+1)/2) / sqrt(pi))^{1/r}.
inline double normal_abs_moment_norm(double r) {
  const double log_m = 0.5 * r * std::log(2.0) + std::lgamma(0.5 * (r + 1.0)) - 0.5 * std::log(std::numbers::pi);
  return std::exp(log_m / r);
}

}  // namespace detail

/// Linear model on `g`: xi = Y_i, zeta = Y_j Y_k, s = d(i, {j,k}).
/// Moment inputs are exact Gaussian norms: ||Y_i||_p for xi and the Holder
/// bound ||Y_j||_{2q} ||Y_k||_{2q} for zeta; C = 1, violation beyond 3 SE.
inline ProductCheckResult product_bound_check(const Graph& g, double gamma, NodeId i, NodeId j, NodeId k,
                                              std::size_t reps, std::uint64_t seed, double p = 8.0, double q = 8.0,
                                              std::size_t workers = 1) {
  detail::require(reps >= 2, "product_bound_check: need replications");
  detail::require(i < g.size() && j < g.size() && k < g.size(), "product_bound_check: node out of range");
  LinearMap map(g, LinearModelSpec{gamma});
  const Eigen::MatrixXd w = map.dense();
  auto sd = [&](NodeId u) { return w.row(u).norm(); };
  DistanceMatrix d(g);
  ProductCheckResult out;
  out.s = std::min(d(i, j), d(i, k));
  std::vector<double> xs(reps), zs(reps);
  parallel_for(reps, workers, [&](std::size_t r) {
    Rng rng = make_rng(derive_seed(seed, {r}));
    auto eps = standard_normal_shocks(g.size(), rng);
    std::vector<double> y(g.size());
    map.apply(eps, y);
    xs[r] = y[i];
    zs[r] = y[j] * y[k];
  });
  const auto n = static_cast<double>(reps);
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double mz = std::accumulate(zs.begin(), zs.end(), 0.0) / n;
  std::vector<double> prod(reps);
  for (std::size_t r = 0; r < reps; ++r) prod[r] = (xs[r] - mx) * (zs[r] - mz);
  auto [cov, se] = detail::mean_se(prod);
  out.cov = cov * n / (n - 1.0);
  out.cov_se = se;
  out.theta = out.s == kInfinity ? 0.0 : theta_linear_bound(g, gamma, out.s);
  const double mu1 = sd(i) * detail::normal_abs_moment_norm(p);
  const double mu2 = sd(j) * sd(k) * detail::normal_abs_moment_norm(2.0 * q) * detail::normal_abs_moment_norm(2.0 * q);
  out.bound = cov_bound_product({out.theta, p, q, 1.0, 2.0, mu1, mu2, mu1, mu2, 1.0});
  out.violated = std::abs(out.cov) > out.bound + 3.0 * out.cov_se;
  return out;
}

}  // namespace nethac

#endif  // NETHAC_VERIFY_HPP
