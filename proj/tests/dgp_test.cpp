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

#include <cmath>

#include "nethac/dgp.hpp"
#include "nethac/fixtures.hpp"
#include "nethac/netstats.hpp"
#include "test_util.hpp"

namespace nethac {
namespace {

using fixtures::ring;
using fixtures::star;

TEST(Formation, TinyLambdaIsEdgeless) {
  auto net = form_network({300, 1e-9, 4});
  EXPECT_EQ(net.graph.edge_count(), 0u);
  EXPECT_LT(net.pi_n, 1e-6);
}

TEST(Formation, ExpectedDegreeMatchesRealized) {
  // conditional on positions, E[deg i] = sum_j p_ij
  testing_util::Moments diff;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto net = form_network({400, 2.0, seed});
    double expect = 0.0;
    for (double e : net.expected_degree) expect += e;
    diff.add(net.graph.average_degree() - expect / 400.0);
    EXPECT_GE(net.pi_n, expect / 400.0);
  }
  EXPECT_NEAR(diff.mean, 0.0, 3.0 * diff.se() + 1e-12);
}

TEST(Formation, SparseCellAverageDegree) {
  // lambda = 1, n = 500: mean average degree about 0.95
  testing_util::Moments m;
  for (std::uint64_t seed = 0; seed < 400; ++seed) m.add(form_network({500, 1.0, seed}).graph.average_degree());
  EXPECT_NEAR(m.mean, 0.95, 0.01 + 3.0 * m.se());
}

TEST(Formation, Deterministic) {
  EXPECT_EQ(form_network({200, 3.0, 42}).graph, form_network({200, 3.0, 42}).graph);
}

TEST(Linear, IdentityAtGammaZero) {
  std::vector<double> eps{0.3, -1.2, 2.0, 0.5, 0.1};
  auto y = simulate_linear(fixtures::path(5), LinearModelSpec{0.0}, eps);
  for (int i = 0; i < 5; ++i) EXPECT_EQ(y[i], eps[i]);
}

TEST(Linear, RingOfFourInjected) {
  std::vector<double> eps(4, 1.0);
  for (double y : simulate_linear(ring(4), LinearModelSpec{0.5}, eps)) EXPECT_DOUBLE_EQ(y, 1.75);
}

TEST(Linear, MatchesExplicitMatrix) {
  Graph g = testing_util::random_graph(40, 0.07, 3);
  const double gamma = 0.6;
  // explicit W_ij = gamma^d / |shell_i(d)|
  DistanceMatrix d(g);
  ShellIndex idx(g);
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(40, 40);
  for (int i = 0; i < 40; ++i)
    for (int j = 0; j < 40; ++j)
      if (d(i, j) != kInfinity) w(i, j) = std::pow(gamma, d(i, j)) / idx.shell_size(i, d(i, j));
  Rng rng = make_rng(1);
  auto eps = standard_normal_shocks(40, rng);
  auto y = simulate_linear(g, LinearModelSpec{gamma, kInfinity, false}, eps);
  Eigen::VectorXd e = Eigen::Map<Eigen::VectorXd>(eps.data(), 40);
  Eigen::VectorXd ref = w * e;
  for (int i = 0; i < 40; ++i) EXPECT_NEAR(y[i], ref(i), 1e-12);
}

TEST(Linear, VarianceOnRingOfFour) {
  LinearMap map(ring(4), LinearModelSpec{0.5});
  Rng rng = make_rng(2);
  testing_util::Moments m;
  std::vector<double> y(4);
  for (int rep = 0; rep < 100000; ++rep) {
    auto eps = standard_normal_shocks(4, rng);
    map.apply(eps, y);
    m.add(y[0]);
  }
  const double v = 1.0 + 2.0 * 0.0625 + 0.0625;
  EXPECT_DOUBLE_EQ(v, 1.1875);
  EXPECT_NEAR(m.variance(), v, 3.0 * v * std::sqrt(2.0 / 99999.0));
}

TEST(Linear, AutoTruncation) {
  EXPECT_EQ(LinearModelSpec{0.0}.max_lag(), 0u);
  const Distance m = LinearModelSpec{0.5}.max_lag();
  EXPECT_LT(std::pow(0.5, m), 1e-12);
  EXPECT_GE(std::pow(0.5, m - 1), 1e-12);
}

TEST(ThetaLinear, Examples) {
  EXPECT_NEAR(theta_linear_bound(ring(100), 0.5, 3), 2.0 * kStdNormalAbsMean * 2.0 * 0.125, 1e-3);
  EXPECT_NEAR(theta_linear_bound(star(10), 0.5, 1), 2.0 * kStdNormalAbsMean * 0.25 * 8.0, 1e-12);
  EXPECT_EQ(theta_linear_bound(ring(10), 0.0, 0), 0.0);
  auto t = theta_linear_sequence(ring(10), 0.0);
  EXPECT_EQ(t(0), 1.0);
  EXPECT_EQ(t(1), 0.0);
}

TEST(ThetaLinear, NonincreasingAndVanishes) {
  Graph g = testing_util::random_graph(80, 0.04, 9);
  const auto diam = table1_stats(g).diameter;
  double prev = std::numeric_limits<double>::infinity();
  for (Distance s = 0; s <= diam; ++s) {
    const double v = theta_linear_bound(g, 0.7, s);
    EXPECT_LE(v, prev);
    prev = v;
  }
  EXPECT_EQ(theta_linear_bound(g, 0.7, diam), 0.0);
}

TEST(ThetaLinear, RatioPremiseOnRings) {
  // theta_s / s^{p/(p-4)} nonincreasing, p = 8
  for (double gamma : {0.1, 0.5, 0.9}) {
    Graph g = ring(200);
    double prev = std::numeric_limits<double>::infinity();
    for (Distance s = 1; s < 100; ++s) {
      const double v = theta_linear_bound(g, gamma, s) / std::pow(s, 2.0);
      EXPECT_LE(v, prev * (1.0 + 1e-12));
      prev = v;
    }
  }
}

TEST(DependencyGraph, EdgelessIsIid) {
  auto y = simulate_dependency_graph(fixtures::edgeless(6), std::vector<double>{1, 2, 3, 4, 5, 6});
  for (int i = 0; i < 6; ++i) EXPECT_EQ(y[i], i + 1.0);
}

TEST(DependencyGraph, CovarianceStructure) {
  // exact covariance W W' vs simulation on ring(6) and P5
  for (Graph g : {ring(6), fixtures::path(5)}) {
    const std::size_t n = g.size();
    Eigen::MatrixXd w = dependency_graph_matrix(g);
    Eigen::MatrixXd cov = w * w.transpose();
    DistanceMatrix d(g);
    Rng rng = make_rng(4);
    const int reps = 200000;
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    for (int r = 0; r < reps; ++r) {
      auto eps = standard_normal_shocks(n, rng);
      auto y = simulate_dependency_graph(g, eps);
      Eigen::VectorXd v = Eigen::Map<Eigen::VectorXd>(y.data(), n);
      acc += v * v.transpose();
    }
    acc /= reps;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const double se = std::sqrt((cov(i, i) * cov(j, j) + cov(i, j) * cov(i, j)) / reps);
        EXPECT_NEAR(acc(i, j), cov(i, j), 3.5 * se);
        if (d(i, j) >= 3) {
          EXPECT_EQ(cov(i, j), 0.0);
        } else {
          EXPECT_GT(cov(i, j), 0.0);
        }
      }
  }
  EXPECT_EQ(dependency_radius(1), 2u);
}

TEST(GaussianFunctional, Examples) {
  auto indep = [](Distance d) { return d == 0 ? 1.0 : 0.0; };
  Graph g = ring(8);
  // identity map: distinct outputs share no shock
  auto id = theta_gaussian_functional(g, Eigen::MatrixXd::Identity(8, 8), indep);
  EXPECT_EQ(id(1), 0.0);
  // radius-1 maps: shared shocks only within distance 2
  auto r1 = theta_gaussian_functional(g, dependency_graph_matrix(g), indep);
  EXPECT_GT(r1(2), 0.0);
  for (Distance s = 3; s < 8; ++s) EXPECT_EQ(r1(s), 0.0);
  // linear model truncated at lag 1
  Eigen::MatrixXd w = LinearMap(g, 0.5, 1).dense();
  auto lm = theta_gaussian_functional(g, w, indep);
  EXPECT_EQ(lm(3), 0.0);
  EXPECT_NEAR(lm(2), 0.25 * 0.25, 1e-15);
}

TEST(GaussianFunctional, CorrelatedShocksReachFurther) {
  Graph g = ring(10);
  auto cov = [](Distance d) { return d == kInfinity ? 0.0 : std::pow(0.3, d); };
  auto t = theta_gaussian_functional(g, Eigen::MatrixXd::Identity(10, 10), cov);
  for (Distance s = 1; s <= 5; ++s) EXPECT_NEAR(t(s), std::pow(0.3, s), 1e-15);
}

TEST(Project, Cases) {
  Eigen::MatrixXd y(3, 2);
  y << 1, 2, 3, 4, 5, 6;
  Sample x(y, Eigen::Vector2d(0.0, 0.0));
  Eigen::MatrixXd e1(3, 2);
  e1 << 1, 0, 1, 0, 1, 0;
  auto z = project_vector_sample(x, e1);
  EXPECT_EQ(z.y.col(0), y.col(0));
  Sample s1 = Sample::scalar({1, 2, 3});
  EXPECT_EQ(project_vector_sample(s1, Eigen::MatrixXd::Ones(3, 1)).y, s1.y);
  EXPECT_THROW(project_vector_sample(x, 2.0 * e1), InvalidArgument);
}

TEST(DeleteEdges, Subgraph) {
  Graph g = testing_util::random_graph(50, 0.2, 1);
  Rng rng = make_rng(3);
  Graph h = delete_edges(g, 0.3, rng);
  for (auto [a, b] : h.edges()) EXPECT_TRUE(g.adjacent(a, b));
  EXPECT_LT(h.edge_count(), g.edge_count());
  Rng r2 = make_rng(3);
  EXPECT_EQ(delete_edges(g, 0.0, r2), g);
}

TEST(TailBound, FormationDraws) {
  std::vector<Graph> gs;
  std::vector<double> pis;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    auto net = form_network({500, 2.0, seed});
    gs.push_back(std::move(net.graph));
    pis.push_back(net.pi_n);
  }
  auto r = tail_bound_monitor(gs, pis, 1, 1.0);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_LE(r.rate, r.allowed_rate);
}

TEST(StarCommonShock, Structure) {
  Rng rng = make_rng(1);
  auto y = simulate_star_common_shock(5, rng);
  Rng rng2 = make_rng(1);
  auto u = standard_normal_shocks(5, rng2);
  EXPECT_EQ(y[0], u[0]);
  for (int i = 1; i < 5; ++i) EXPECT_EQ(y[i], u[0] + u[i]);
}

}  // namespace
}  // namespace nethac
