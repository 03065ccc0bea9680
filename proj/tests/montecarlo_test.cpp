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
#include <sstream>

#include "nethac/montecarlo.hpp"

namespace nethac {
namespace {

McCell small_cell(double lambda, std::size_t n, double gamma, std::size_t reps) {
  McCell c;
  c.lambda = lambda;
  c.n = n;
  c.gamma = gamma;
  c.reps = reps;
  c.seed = 77;
  return c;
}

TEST(McCell, Validation) {
  McCell c = small_cell(1.0, 100, 0.0, 0);
  EXPECT_THROW(run_cell(c), InvalidArgument);
  c = small_cell(1.0, 100, 1.0, 5);
  EXPECT_THROW(run_cell(c), InvalidArgument);
  c = small_cell(-1.0, 100, 0.0, 5);
  EXPECT_THROW(run_cell(c), InvalidArgument);
}

TEST(RunCell, CoverageAndRejectionComplement) {
  auto r = run_cell(small_cell(2.0, 200, 0.2, 200));
  EXPECT_EQ(r.valid_reps + r.neg_var_count, 200u);
  if (r.neg_var_count == 0) {
    EXPECT_EQ(r.coverage + r.rejection, 1.0);
  }
  EXPECT_GE(r.coverage, 0.0);
  EXPECT_LE(r.coverage, 1.0);
  EXPECT_LE(r.coverage_all, r.coverage);
}

TEST(RunCell, IidCoverageNearNominal) {
  auto r = run_cell(small_cell(1.0, 300, 0.0, 400));
  EXPECT_NEAR(r.coverage, 0.95, 3.0 * std::sqrt(0.95 * 0.05 / 400.0) + 0.01);
  EXPECT_EQ(r.neg_var_count, 0u);
}

TEST(RunCell, SingleReplication) {
  auto r = run_cell(small_cell(1.0, 100, 0.0, 1));
  EXPECT_TRUE(r.rejection == 0.0 || r.rejection == 1.0);
}

TEST(RunCell, ReplicationMatchesManualPipeline) {
  McCell c = small_cell(2.0, 150, 0.3, 1);
  McRep rep = run_replication(c, 0);
  Rng rng = make_rng(replication_seed(c, 0));
  auto formed = form_network(c.n, c.lambda, rng);
  LinearMap map(formed.graph, LinearModelSpec{c.gamma});
  auto eps = standard_normal_shocks(c.n, rng);
  std::vector<double> y(c.n);
  map.apply(eps, y);
  const double b = bandwidth({c.bw_constant, c.bw_epsilon}, c.n, formed.graph.average_degree());
  Sample x = Sample::scalar(y);
  EXPECT_DOUBLE_EQ(rep.bandwidth, b);
  EXPECT_DOUBLE_EQ(rep.v_hat, hac_unknown_mean(formed.graph, x, {KernelFamily::parzen, b}).v(0, 0));
  EXPECT_DOUBLE_EQ(rep.v_true, exact_variance_oracle(formed.graph, LinearModelSpec{c.gamma}));
}

TEST(RunCell, MissingEdgesShrinkObservedBandwidthInput) {
  McCell full = small_cell(3.0, 200, 0.2, 20);
  McCell partial = full;
  partial.missing_prob = 0.5;
  auto a = run_cell(full), b = run_cell(partial);
  EXPECT_EQ(a.avg_degree.mean, b.avg_degree.mean);  // true network stats are unaffected
  EXPECT_GT(b.bandwidth.mean, a.bandwidth.mean);    // sparser observed graph, wider bandwidth
}

TEST(RunGrid, DeterministicBytesAndWorkers) {
  std::vector<double> lam{1.0, 3.0}, gam{0.0, 0.4}, cons{2.0};
  std::vector<std::size_t> ns{120};
  McCell base = small_cell(1.0, 120, 0.0, 30);
  auto cells = make_grid(lam, ns, gam, cons, base);
  ASSERT_EQ(cells.size(), 4u);
  auto csv = [&](std::size_t workers) {
    std::ostringstream os;
    auto r = run_grid(cells, workers);
    write_study_csv(os, r);
    return std::make_pair(os.str(), r);
  };
  auto [s1, r1] = csv(1);
  auto [s2, r2] = csv(1);
  auto [s3, r3] = csv(3);
  EXPECT_EQ(s1, s2);
  EXPECT_EQ(s1, s3);
  for (std::size_t c = 0; c < r1.size(); ++c) {
    EXPECT_NEAR(r1[c].coverage, r3[c].coverage, 1e-12);
    EXPECT_NEAR(r1[c].mean_v_hat, r3[c].mean_v_hat, 1e-12);
    EXPECT_NEAR(r1[c].median_rel_error, r3[c].median_rel_error, 1e-12);
  }
  // a cell's results do not depend on which grid it was run in
  auto alone = run_cell(cells[2]);
  EXPECT_EQ(alone.coverage, r1[2].coverage);
  EXPECT_EQ(alone.mean_v_hat, r1[2].mean_v_hat);
}

TEST(RunGrid, EmptyGridWritesHeader) {
  std::ostringstream os;
  write_study_csv(os, run_grid(std::span<const McCell>{}));
  EXPECT_EQ(os.str(), std::string(kStudyCsvHeader) + "\n");
}

TEST(RunCell, StandardErrorScaling) {
  // quadrupling reps halves the coverage standard error
  auto a = run_cell(small_cell(1.0, 100, 0.0, 200));
  auto b = run_cell(small_cell(1.0, 100, 0.0, 800));
  EXPECT_NEAR(b.coverage_se / a.coverage_se, 0.5, 0.15);
}

TEST(PowerCurve, RejectionIsOneMinusCoverage) {
  std::vector<std::size_t> ns{150};
  std::vector<double> gam{0.0, 0.5};
  McCell base = small_cell(3.0, 150, 0.0, 1);
  auto pts = power_curve(3.0, ns, gam, 60, base);
  ASSERT_EQ(pts.size(), 2u);
  for (const auto& p : pts) {
    EXPECT_GE(p.rejection, 0.0);
    EXPECT_LE(p.rejection, 1.0);
  }
  McCell c = base;
  c.reps = 60;
  c.gamma = 0.5;
  auto r = run_cell(c);
  EXPECT_EQ(pts[1].rejection, r.rejection);
}

TEST(Helpers, MedianAndDispersion) {
  EXPECT_EQ(detail::median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_EQ(detail::median({4.0, 1.0, 3.0, 2.0}), 2.5);
  std::vector<double> x{1.0, 2.0, 3.0};
  auto d = detail::dispersion(x);
  EXPECT_DOUBLE_EQ(d.mean, 2.0);
  EXPECT_DOUBLE_EQ(d.sd, 1.0);
}

}  // namespace
}  // namespace nethac
