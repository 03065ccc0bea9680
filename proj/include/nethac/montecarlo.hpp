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

#ifndef NETHAC_MONTECARLO_HPP
#define NETHAC_MONTECARLO_HPP

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "nethac/dgp.hpp"
#include "nethac/hac.hpp"
#include "nethac/kernels.hpp"
#include "nethac/netstats.hpp"
#include "nethac/parallel.hpp"
#include "nethac/random.hpp"

namespace nethac {

/// One design point of the coverage study.
struct McCell {
  double lambda = 1.0;
  std::size_t n = 500;
  double gamma = 0.0;
  double bw_constant = 2.0;
  double bw_epsilon = 0.05;
  KernelFamily kernel = KernelFamily::parzen;
  std::size_t reps = 1000;
  std::uint64_t seed = 1;
  double missing_prob = 0.0;  // edges hidden from the estimator
  double level = 0.95;

  void validate() const {
    detail::require(reps >= 1, "mc cell: reps must be at least 1");
    detail::require(gamma >= 0.0 && gamma < 1.0, "mc cell: gamma must be in [0,1)");
    detail::require(lambda > 0.0, "mc cell: lambda must be positive");
    detail::require(n >= 2, "mc cell: n must be at least 2");
    detail::require(missing_prob >= 0.0 && missing_prob <= 1.0, "mc cell: missing_prob must be in [0,1]");
  }
};

/// What one replication produced.
struct McRep {
  double mean = 0.0;
  double v_hat = 0.0;
  double v_true = 0.0;
  double bandwidth = 0.0;
  bool negative_variance = false;
  bool covered = false;  // 95% CI contains the true mean 0
  NetworkSummary net;
};

struct Dispersion {
  double mean = 0.0;
  double sd = 0.0;
};

struct McReport {
  McCell cell;
  std::size_t valid_reps = 0;
  std::size_t neg_var_count = 0;
  double coverage = 0.0;       // over reps with V_hat >= 0
  double rejection = 0.0;      // 1 - coverage on the same reps
  double coverage_se = 0.0;
  double coverage_all = 0.0;   // negative-variance reps counted as misses
  Dispersion diameter, avg_degree, max_degree, avg_distance, bandwidth;
  double median_rel_error = 0.0;  // median |V_hat - V_n| / V_n
  double mean_v_hat = 0.0;
  double mean_v_true = 0.0;
};

/// Seed of replication `rep` in `cell`, independent of execution order.
/// Only data-generating fields enter, so cells that differ in estimator
/// settings (kernel, bandwidth, missing edges) see the same draws.
inline std::uint64_t replication_seed(const McCell& c, std::size_t rep) {
  return derive_seed(c.seed, {seed_key(c.lambda), c.n, seed_key(c.gamma), rep});
}

/// Fresh network, linear model, V_hat with the bandwidth rule, CI for 0.
inline McRep run_replication(const McCell& cell, std::size_t rep) {
  Rng rng = make_rng(replication_seed(cell, rep));
  auto formed = form_network(cell.n, cell.lambda, rng);
  McRep out;
  out.net = table1_stats(formed.graph);
  LinearMap map(formed.graph, LinearModelSpec{cell.gamma});
  auto eps = standard_normal_shocks(cell.n, rng);
  std::vector<double> y(cell.n);
  map.apply(eps, y);
  double vt = 0.0;
  for (double c : map.column_sums()) vt += c * c;
  out.v_true = vt / static_cast<double>(cell.n);

  const Graph observed = cell.missing_prob > 0.0 ? delete_edges(formed.graph, cell.missing_prob, rng) : formed.graph;
  const double avg_deg = observed.average_degree();
  out.bandwidth = bandwidth({cell.bw_constant, cell.bw_epsilon}, cell.n, avg_deg);
  Sample x = Sample::scalar(y);
  out.mean = x.mean()(0);
  out.v_hat = hac_unknown_mean(observed, x, {cell.kernel, out.bandwidth}).v(0, 0);
  if (out.v_hat < 0.0) {
    out.negative_variance = true;
    return out;
  }
  out.covered = confidence_interval(out.mean, out.v_hat, cell.n, cell.level).contains(0.0);
  return out;
}

namespace detail {

inline Dispersion dispersion(std::span<const double> x) {
  Dispersion d;
  if (x.empty()) return d;
  const auto n = static_cast<double>(x.size());
  d.mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : x) ss += (v - d.mean) * (v - d.mean);
  d.sd = x.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  return d;
}

inline double median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const std::size_t h = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + h, v.end());
  if (v.size() % 2 == 1) return v[h];
  const double hi = v[h];
  return 0.5 * (hi + *std::max_element(v.begin(), v.begin() + h));
}

}  // namespace detail

/// Sequential, fixed-order aggregation of replication results.
inline McReport summarize(const McCell& cell, std::span<const McRep> reps) {
  McReport r;
  r.cell = cell;
  std::vector<double> diam, deg, maxdeg, dist, bw, rel;
  std::size_t covered = 0;
  double sum_vh = 0.0, sum_vt = 0.0;
  for (const auto& x : reps) {
    diam.push_back(x.net.diameter);
    deg.push_back(x.net.avg_degree);
    maxdeg.push_back(static_cast<double>(x.net.max_degree));
    dist.push_back(x.net.avg_connected_distance);
    bw.push_back(x.bandwidth);
    rel.push_back(std::abs(x.v_hat - x.v_true) / x.v_true);
    sum_vh += x.v_hat;
    sum_vt += x.v_true;
    if (x.negative_variance) {
      ++r.neg_var_count;
      continue;
    }
    ++r.valid_reps;
    covered += x.covered;
  }
  if (r.valid_reps > 0) {
    r.coverage = static_cast<double>(covered) / static_cast<double>(r.valid_reps);
    r.rejection = static_cast<double>(r.valid_reps - covered) / static_cast<double>(r.valid_reps);
    r.coverage_se = std::sqrt(r.coverage * (1.0 - r.coverage) / static_cast<double>(r.valid_reps));
  }
  if (!reps.empty()) {
    r.coverage_all = static_cast<double>(covered) / static_cast<double>(reps.size());
    r.mean_v_hat = sum_vh / static_cast<double>(reps.size());
    r.mean_v_true = sum_vt / static_cast<double>(reps.size());
  }
  r.diameter = detail::dispersion(diam);
  r.avg_degree = detail::dispersion(deg);
  r.max_degree = detail::dispersion(maxdeg);
  r.avg_distance = detail::dispersion(dist);
  r.bandwidth = detail::dispersion(bw);
  r.median_rel_error = detail::median(rel);
  return r;
}

inline McReport run_cell(const McCell& cell, std::size_t workers = 1) {
  cell.validate();
  std::vector<McRep> reps(cell.reps);
  parallel_for(cell.reps, workers, [&](std::size_t k) { reps[k] = run_replication(cell, k); });
  return summarize(cell, reps);
}

/// All cells; replications of every cell share one worker pool.
inline std::vector<McReport> run_grid(std::span<const McCell> cells, std::size_t workers = 1) {
  for (const auto& c : cells) c.validate();
  std::vector<std::size_t> offset{0};
  for (const auto& c : cells) offset.push_back(offset.back() + c.reps);
  std::vector<McRep> reps(offset.back());
  parallel_for(reps.size(), workers, [&](std::size_t k) {
    const auto cell = static_cast<std::size_t>(std::upper_bound(offset.begin(), offset.end(), k) - offset.begin()) - 1;
    reps[k] = run_replication(cells[cell], k - offset[cell]);
  });
  std::vector<McReport> out;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    out.push_back(summarize(cells[c], std::span<const McRep>(reps).subspan(offset[c], cells[c].reps)));
  }
  return out;
}

/// Full factorial grid.
inline std::vector<McCell> make_grid(std::span<const double> lambdas, std::span<const std::size_t> ns,
                                     std::span<const double> gammas, std::span<const double> constants,
                                     const McCell& base) {
  std::vector<McCell> out;
  for (double l : lambdas)
    for (std::size_t n : ns)
      for (double g : gammas)
        for (double c : constants) {
          McCell cell = base;
          cell.lambda = l;
          cell.n = n;
          cell.gamma = g;
          cell.bw_constant = c;
          out.push_back(cell);
        }
  return out;
}

inline constexpr std::string_view kStudyCsvHeader =
    "lambda,n,gamma,bw_constant,kernel,reps,coverage,coverage_se,rejection,neg_var,coverage_all,"
    "diameter_mean,diameter_sd,avg_degree_mean,avg_degree_sd,max_degree_mean,max_degree_sd,"
    "avg_distance_mean,avg_distance_sd,bandwidth_mean,median_rel_error";

/// One row per cell; fixed formatting so equal inputs give equal bytes.
inline void write_study_csv(std::ostream& os, std::span<const McReport> reports) {
  os << kStudyCsvHeader << '\n';
  for (const auto& r : reports) {
    fmt::print(os, "{:.4g},{},{:.4g},{:.4g},{},{},{:.6f},{:.6f},{:.6f},{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f}\n",
               r.cell.lambda, r.cell.n, r.cell.gamma, r.cell.bw_constant, to_string(r.cell.kernel), r.cell.reps,
               r.coverage, r.coverage_se, r.rejection, r.neg_var_count, r.coverage_all, r.diameter.mean, r.diameter.sd,
               r.avg_degree.mean, r.avg_degree.sd, r.max_degree.mean, r.max_degree.sd, r.avg_distance.mean,
               r.avg_distance.sd, r.bandwidth.mean, r.median_rel_error);
  }
}

struct PowerPoint {
  std::size_t n = 0;
  double gamma = 0.0;
  double rejection = 0.0;
  double rejection_se = 0.0;
  std::size_t neg_var_count = 0;
};

/// Rejection rates of the two-sided 5% test of mean 0 across (n, gamma).
/// The truth is 0, so these are size, and equal 1 - coverage per cell.
inline std::vector<PowerPoint> power_curve(double lambda, std::span<const std::size_t> ns,
                                           std::span<const double> gammas, std::size_t reps, const McCell& base,
                                           std::size_t workers = 1) {
  std::vector<double> lam{lambda}, cons{base.bw_constant};
  McCell b = base;
  b.reps = reps;
  auto cells = make_grid(lam, ns, gammas, cons, b);
  std::vector<PowerPoint> out;
  for (const auto& r : run_grid(cells, workers)) {
    out.push_back({r.cell.n, r.cell.gamma, r.rejection, r.coverage_se, r.neg_var_count});
  }
  return out;
}

}  // namespace nethac

#endif  // NETHAC_MONTECARLO_HPP
