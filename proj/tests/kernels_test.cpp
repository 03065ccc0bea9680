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
#include <limits>

#include "nethac/fixtures.hpp"
#include "nethac/hac.hpp"
#include "nethac/kernels.hpp"
#include "test_util.hpp"

namespace nethac {
namespace {

constexpr KernelFamily kAll[] = {KernelFamily::parzen, KernelFamily::bartlett, KernelFamily::truncated,
                                 KernelFamily::tukey_hanning};

TEST(Kernel, Examples) {
  EXPECT_DOUBLE_EQ(kernel_eval(KernelFamily::parzen, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(kernel_eval(KernelFamily::parzen, 0.5), 0.25);
  EXPECT_DOUBLE_EQ(kernel_eval(KernelFamily::bartlett, 1.5), 0.0);
  EXPECT_DOUBLE_EQ(kernel_eval(KernelFamily::tukey_hanning, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(kernel_eval(KernelFamily::truncated, 1.0), 1.0);
  EXPECT_DOUBLE_EQ(kernel_eval(KernelFamily::parzen, std::numeric_limits<double>::infinity()), 0.0);
}

TEST(Kernel, ParzenBranchesMeetAtHalf) {
  const double lower = 1.0 - 6.0 * 0.25 + 6.0 * 0.125;
  const double upper = 2.0 * 0.125;
  EXPECT_NEAR(lower, upper, 1e-12);
  EXPECT_NEAR(kernel_eval(KernelFamily::parzen, std::nextafter(0.5, 1.0)), 0.25, 1e-12);
  EXPECT_NEAR(kernel_eval(KernelFamily::parzen, std::nextafter(0.5, 0.0)), 0.25, 1e-12);
}

TEST(Kernel, Axioms) {
  for (auto f : kAll) {
    EXPECT_EQ(kernel_eval(f, 0.0), 1.0);
    for (int t = -3000; t <= 3000; ++t) {
      const double x = t / 1000.0;
      const double w = kernel_eval(f, x);
      EXPECT_EQ(w, kernel_eval(f, -x));
      EXPECT_LE(std::abs(w), 1.0);
      if (std::abs(x) > 1.0) {
        EXPECT_EQ(w, 0.0);
      }
      EXPECT_NEAR(kernel_one_minus(f, x), 1.0 - w, 1e-12);
    }
  }
  EXPECT_EQ(parse_kernel("tukey-hanning"), KernelFamily::tukey_hanning);
  EXPECT_THROW(parse_kernel("gauss"), InvalidArgument);
}

TEST(Bandwidth, Rule) {
  BandwidthRule rule{2.0, 0.05};
  EXPECT_NEAR(bandwidth(rule, 1000, 3.0), 12.575, 0.005);
  EXPECT_NEAR(bandwidth(rule, 1000, 3.0), 2.0 * std::log(1000.0) / std::log(3.0), 1e-12);
  EXPECT_NEAR(bandwidth(rule, 500, 0.95), 2.0 * std::log(500.0) / std::log(1.05), 1e-9);
  EXPECT_NEAR(bandwidth(rule, 500, 0.95), 254.7, 0.1);
  EXPECT_DOUBLE_EQ(bandwidth({0.0, 0.05}, 500, 3.0), 0.0);
  EXPECT_THROW(bandwidth(rule, 1, 3.0), InvalidArgument);
}

TEST(Regularity, Families) {
  auto tr = kernel_regularity(KernelFamily::truncated, 1.0);
  EXPECT_EQ(tr.c_estimate, 0.0);
  EXPECT_FALSE(tr.violation);
  auto pz = kernel_regularity(KernelFamily::parzen, 1.0);
  EXPECT_NEAR(pz.c_estimate, 6.0, 1e-6);
  EXPECT_FALSE(pz.violation);
  auto th = kernel_regularity(KernelFamily::tukey_hanning, 1.0);
  EXPECT_NEAR(th.c_estimate, std::numbers::pi * std::numbers::pi / 4.0, 1e-6);
  EXPECT_TRUE(kernel_regularity(KernelFamily::bartlett, 0.5).violation);
  EXPECT_THROW(kernel_regularity(KernelFamily::parzen, 0.0), InvalidArgument);
}

TEST(WeightMatrix, Examples) {
  auto w = weight_matrix(fixtures::ring(4), {KernelFamily::bartlett, 3.0});
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const int d = std::min(std::abs(i - j), 4 - std::abs(i - j));
      EXPECT_NEAR(w(i, j), 1.0 - d / 3.0, 1e-15);
    }
  Graph two = Graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {3, 4}});
  auto t = weight_matrix(two, {KernelFamily::truncated, 10.0});
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const bool same = (i < 3 && j < 3) || (i >= 3 && i < 5 && j >= 3 && j < 5) || i == j;
      EXPECT_EQ(t(i, j), same ? 1.0 : 0.0);
    }
  auto e = weight_matrix(fixtures::edgeless(5), {KernelFamily::parzen, 4.0});
  EXPECT_TRUE(e.isIdentity());
  EXPECT_THROW(weight_matrix(fixtures::ring(10), {KernelFamily::parzen, 2.0}, 5), SizeLimitExceeded);
}

TEST(WeightMatrix, ExactlySymmetric) {
  Graph g = testing_util::random_graph(60, 0.05, 8);
  auto w = weight_matrix(g, {KernelFamily::parzen, 4.3});
  EXPECT_TRUE((w.array() == w.transpose().array()).all());
}

TEST(Psd, Examples) {
  auto ring = psd_check(weight_matrix(fixtures::ring(8), {KernelFamily::bartlett, 3.0}));
  EXPECT_TRUE(ring.psd) << ring.min_eigenvalue;
  EXPECT_TRUE(psd_check(Eigen::MatrixXd::Identity(5, 5)).psd);
  Eigen::MatrixXd asym = Eigen::MatrixXd::Identity(3, 3);
  asym(0, 1) = 0.5;
  EXPECT_THROW(psd_check(asym), InvalidArgument);
}

TEST(Psd, ChordSearchFindsIndefinite) {
  auto r = find_indefinite_chord(fixtures::ring(8), {KernelFamily::bartlett, 3.0});
  ASSERT_TRUE(r.found);
  EXPECT_LT(r.min_eigenvalue, -1e-6);
  auto e = fixtures::ring(8).edges();
  e.push_back(r.chord);
  EXPECT_FALSE(psd_check(weight_matrix(Graph(8, e), {KernelFamily::bartlett, 3.0})).psd);
}

TEST(Psd, PsdWeightsGiveNonnegativeForms) {
  // W = L L' implies both HAC estimators are PSD for any sample.
  Graph g = fixtures::ring(8);
  KernelSpec spec{KernelFamily::bartlett, 3.0};
  ASSERT_TRUE(psd_check(weight_matrix(g, spec)).psd);
  Rng rng = make_rng(3);
  std::normal_distribution<double> z;
  for (int rep = 0; rep < 100; ++rep) {
    Eigen::MatrixXd y(8, 2);
    for (int i = 0; i < 8; ++i)
      for (int k = 0; k < 2; ++k) y(i, k) = z(rng) + 0.3 * k;
    Sample x(y, Eigen::VectorXd::Zero(2));
    EXPECT_GE(hac_known_mean(g, x, spec).min_eigenvalue, -1e-12);
    EXPECT_GE(hac_unknown_mean(g, x, spec).min_eigenvalue, -1e-12);
  }
}

}  // namespace
}  // namespace nethac
