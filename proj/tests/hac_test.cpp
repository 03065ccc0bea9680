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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "nethac/dgp.hpp"
#include "nethac/fixtures.hpp"
#include "nethac/hac.hpp"
#include "test_util.hpp"

namespace nethac {
namespace {

using fixtures::ring;

// Dense-form oracle: V = n^-1 sum_ij w(d_ij) z_i z_j' from a weight matrix.
Eigen::MatrixXd dense_hac(const Graph& g, const Eigen::MatrixXd& z, const KernelSpec& spec) {
  DistanceMatrix d(g);
  const auto n = z.rows();
  Eigen::MatrixXd v = Eigen::MatrixXd::Zero(z.cols(), z.cols());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      const Distance s = d(i, j);
      if (s == kInfinity || s > spec.max_lag()) continue;
      v += spec.weight(s) * z.row(i).transpose() * z.row(j);
    }
  return v / static_cast<double>(n);
}

Eigen::MatrixXd random_matrix(Eigen::Index n, Eigen::Index v, std::uint64_t seed, double shift = 0.0) {
  Rng rng = make_rng(seed);
  std::normal_distribution<double> z;
  Eigen::MatrixXd m(n, v);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < v; ++k) m(i, k) = z(rng) + shift;
  return m;
}

TEST(Omega, Examples) {
  Graph pair = Graph(2, std::vector<Edge>{{0, 1}});
  Sample x = Sample::scalar({1.0, 2.0}, 0.0);
  EXPECT_DOUBLE_EQ(omega_tilde(pair, x, 1)(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(omega_tilde(pair, x, 5)(0, 0), 0.0);
  EXPECT_DOUBLE_EQ(omega_tilde(ring(4), Sample::scalar({1, 1, 1, 1}, 0.0), 1)(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(omega_hat(ring(4), Sample::scalar({1, -1, 1, -1}), 2)(0, 0), 1.0);
  for (Distance s = 0; s < 4; ++s) EXPECT_DOUBLE_EQ(omega_hat(ring(4), Sample::scalar({3, 3, 3, 3}), s)(0, 0), 0.0);
  EXPECT_THROW(omega_tilde(ring(4), Sample::scalar({1, 2, 3, 4}), 1), InvalidArgument);
}

TEST(Omega, HatEqualsTildeWhenMeansAgree) {
  Graph g = testing_util::random_graph(30, 0.1, 2);
  Eigen::MatrixXd y = random_matrix(30, 2, 5);
  Sample x(y, Eigen::VectorXd(y.colwise().mean().transpose()));
  for (Distance s = 0; s < 5; ++s) EXPECT_TRUE(omega_tilde(g, x, s).isApprox(omega_hat(g, x, s), 1e-12));
}

TEST(Hac, MatchesDenseOracle) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Graph g = testing_util::random_graph(40, 0.08, seed);
    Eigen::MatrixXd y = random_matrix(40, 3, seed + 100, 0.4);
    Eigen::VectorXd mu = Eigen::VectorXd::Constant(3, 0.1);
    Sample x(y, mu);
    for (auto f : {KernelFamily::parzen, KernelFamily::bartlett, KernelFamily::tukey_hanning}) {
      KernelSpec spec{f, 3.7};
      auto known = hac_known_mean(g, x, spec);
      auto unknown = hac_unknown_mean(g, x, spec);
      EXPECT_TRUE(known.v.isApprox(dense_hac(g, y.rowwise() - mu.transpose(), spec), 1e-12));
      EXPECT_TRUE(unknown.v.isApprox(dense_hac(g, y.rowwise() - y.colwise().mean(), spec), 1e-12));
      // V equals the weighted lag sum
      Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(3, 3);
      for (std::size_t s = 0; s < known.lag_covariances.size(); ++s) sum += known.weights[s] * known.lag_covariances[s];
      EXPECT_TRUE(known.v.isApprox(0.5 * (sum + sum.transpose()), 1e-14));
      EXPECT_TRUE((known.v - known.v.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * known.v.cwiseAbs().maxCoeff());
    }
  }
}

TEST(Hac, TruncatedFullBandwidthIsOuterProduct) {
  Graph g = testing_util::random_graph(25, 0.3, 4);
  ASSERT_TRUE(is_connected(g));
  Eigen::MatrixXd y = random_matrix(25, 2, 9);
  Eigen::VectorXd mu(2);
  mu << 0.2, -0.1;
  auto r = hac_known_mean(g, Sample(y, mu), {KernelFamily::truncated, 100.0});
  Eigen::VectorXd s = (y.rowwise() - mu.transpose()).colwise().sum().transpose();
  EXPECT_TRUE(r.v.isApprox(s * s.transpose() / 25.0, 1e-12));
}

TEST(Hac, ZeroBandwidthKeepsLagZero) {
  Graph g = ring(10);
  Eigen::MatrixXd y = random_matrix(10, 1, 3);
  auto r = hac_unknown_mean(g, Sample(y), {KernelFamily::parzen, 0.0});
  EXPECT_EQ(r.lag_covariances.size(), 1u);
  EXPECT_NEAR(r.v(0, 0), omega_hat(g, Sample(y), 0)(0, 0), 1e-15);
}

TEST(Hac, ConstantSampleGivesZero) {
  auto r = hac_unknown_mean(ring(9), Sample::scalar(std::vector<double>(9, 2.5)), {KernelFamily::parzen, 3.0});
  EXPECT_EQ(r.v(0, 0), 0.0);
}

TEST(Hac, PermutationInvariant) {
  Graph g = testing_util::random_graph(30, 0.1, 6);
  Eigen::MatrixXd y = random_matrix(30, 2, 7);
  std::vector<NodeId> perm(30);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng = make_rng(1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> pe;
  for (auto [a, b] : g.edges()) pe.emplace_back(perm[a], perm[b]);
  Eigen::MatrixXd py(30, 2);
  for (int i = 0; i < 30; ++i) py.row(perm[i]) = y.row(i);
  KernelSpec spec{KernelFamily::parzen, 4.0};
  EXPECT_TRUE(hac_unknown_mean(g, Sample(y), spec).v.isApprox(hac_unknown_mean(Graph(30, pe), Sample(py), spec).v, 1e-12));
}

TEST(Hac, RingIdentity) {
  // From the definitions: the lag-0 term differs by ybar^2 and each lag
  // s >= 1 by 2 ybar^2, so c'(Vt - Vh)c = ybar^2 (1 + m).
  for (std::size_t n = 7; n <= 25; ++n) {
    Graph g = ring(n);
    for (Distance m = 1; 2 * m + 2 <= n; ++m) {
      Eigen::MatrixXd y = random_matrix(n, 2, n * 100 + m, 0.5);
      Sample x(y, Eigen::VectorXd::Zero(2));
      KernelSpec spec{KernelFamily::bartlett, static_cast<double>(m + 1)};
      Eigen::Vector2d c(0.6, 1.3);
      const Eigen::MatrixXd vt = hac_known_mean(g, x, spec).v;
      const double diff = c.dot((vt - hac_unknown_mean(g, x, spec).v) * c);
      const double ybar = c.dot(x.mean());
      const double target = ybar * ybar * (1.0 + m);
      EXPECT_NEAR(diff, target, 1e-10 * std::max(target, c.dot(vt * c))) << n << " " << m;
    }
  }
}

TEST(HacPartial, Cases) {
  Graph g = testing_util::random_graph(30, 0.1, 11);
  Eigen::MatrixXd y = random_matrix(30, 1, 12);
  Sample x(y, Eigen::VectorXd::Zero(1));
  KernelSpec spec{KernelFamily::parzen, 3.0};
  EXPECT_EQ(hac_partial(g, x, spec, MeanMode::known_mean).v, hac_known_mean(g, x, spec).v);
  EXPECT_EQ(hac_partial(g, x, spec, MeanMode::unknown_mean).v, hac_unknown_mean(g, x, spec).v);
  auto iso = hac_partial(fixtures::edgeless(30), x, spec, MeanMode::known_mean);
  EXPECT_NEAR(iso.v(0, 0), y.squaredNorm() / 30.0, 1e-14);
}

TEST(HacPartial, MissingLinksStayClose) {
  // ring(1000) with 5% of edges dropped, gamma = 0.2 model
  Graph g = ring(1000);
  const double vn = exact_variance_oracle(g, 0.2);
  LinearMap map(g, LinearModelSpec{0.2});
  KernelSpec spec{KernelFamily::parzen, bandwidth({}, 1000, 2.0)};
  std::vector<double> full_err, part_err;
  for (int rep = 0; rep < 60; ++rep) {
    Rng rng = make_rng(derive_seed(77, {static_cast<std::uint64_t>(rep)}));
    auto eps = standard_normal_shocks(1000, rng);
    std::vector<double> y(1000);
    map.apply(eps, y);
    Graph obs = delete_edges(g, 0.05, rng);
    Sample x = Sample::scalar(y);
    full_err.push_back(std::abs(hac_unknown_mean(g, x, spec).v(0, 0) - vn));
    part_err.push_back(std::abs(hac_partial(obs, x, spec, MeanMode::unknown_mean).v(0, 0) - vn));
  }
  auto median = [](std::vector<double> v) {
    std::nth_element(v.begin(), v.begin() + v.size() / 2, v.end());
    return v[v.size() / 2];
  };
  EXPECT_LE(median(part_err), 2.0 * median(full_err));
}

TEST(ConfidenceInterval, Examples) {
  auto ci = confidence_interval(0.0, 1.0, 100, 0.95);
  EXPECT_NEAR(ci.upper, 0.19600, 5e-6);
  EXPECT_NEAR(ci.lower, -0.19600, 5e-6);
  EXPECT_NEAR(normal_quantile(0.975), 1.959964, 1e-6);
  auto deg = confidence_interval(0.3, 1.0, 100, 0.0);
  EXPECT_EQ(deg.lower, 0.3);
  EXPECT_EQ(deg.upper, 0.3);
  EXPECT_THROW(confidence_interval(0.0, -0.1, 100), IndefiniteEstimate);
}

TEST(ExactOracle, Examples) {
  EXPECT_DOUBLE_EQ(exact_variance_oracle(testing_util::random_graph(20, 0.2, 1), 0.0), 1.0);
  EXPECT_NEAR(exact_variance_oracle(ring(4), 0.5), 3.0625, 1e-14);
}

TEST(ExactOracle, MatchesDenseMap) {
  Graph g = testing_util::random_graph(40, 0.06, 17);
  for (double gamma : {0.2, 0.5, 0.8}) {
    LinearMap map(g, gamma, kInfinity);
    Eigen::MatrixXd w = map.dense();
    const double v = w.colwise().sum().squaredNorm() / 40.0;
    EXPECT_NEAR(exact_variance_oracle(g, gamma), v, 1e-12);
  }
}

TEST(ExactOracle, StarMatchesSimulation) {
  Graph g = fixtures::star(3);
  const double vn = exact_variance_oracle(g, 0.5);
  LinearMap map(g, 0.5, kInfinity);
  Rng rng = make_rng(5);
  testing_util::Moments m;
  std::vector<double> y(3);
  for (int rep = 0; rep < 1000000; ++rep) {
    auto eps = standard_normal_shocks(3, rng);
    map.apply(eps, y);
    m.add((y[0] + y[1] + y[2]) / std::sqrt(3.0));
  }
  // se of a sample variance for Gaussian data: sigma^2 sqrt(2/(N-1))
  EXPECT_NEAR(m.variance(), vn, 3.0 * vn * std::sqrt(2.0 / 999999.0));
}

TEST(Hac, UnbiasedWithTruncatedFullBandwidth) {
  Graph g = testing_util::random_graph(200, 0.03, 21);
  const double gamma = 0.4;
  const double vn = exact_variance_oracle(g, gamma);
  LinearMap map(g, gamma, kInfinity);
  KernelSpec spec{KernelFamily::truncated, 1e6};
  testing_util::Moments m;
  std::vector<double> y(200);
  Rng rng = make_rng(8);
  for (int rep = 0; rep < 2000; ++rep) {
    auto eps = standard_normal_shocks(200, rng);
    map.apply(eps, y);
    m.add(hac_known_mean(g, Sample::scalar(y, 0.0), spec).v(0, 0));
  }
  EXPECT_NEAR(m.mean, vn, 3.0 * m.se());
}

TEST(Hac, IidModelCentredAtOne) {
  Graph g = testing_util::random_graph(200, 0.02, 22);
  KernelSpec spec{KernelFamily::parzen, bandwidth({}, 200, g.average_degree())};
  testing_util::Moments m;
  Rng rng = make_rng(9);
  for (int rep = 0; rep < 2000; ++rep) {
    auto eps = standard_normal_shocks(200, rng);
    m.add(hac_known_mean(g, Sample::scalar(eps, 0.0), spec).v(0, 0));
  }
  EXPECT_NEAR(m.mean, 1.0, 3.0 * m.se());
}

}  // namespace
}  // namespace nethac
