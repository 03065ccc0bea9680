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

#ifndef NETHAC_NETSTATS_HPP
#define NETHAC_NETSTATS_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "nethac/graph.hpp"
#include "nethac/theta.hpp"

namespace nethac {

namespace detail {

/// x^k with 0^0 = 1 and 0^k = 0 for k > 0.
inline double pow0(double x, double k) {
  if (k == 0.0) return 1.0;
  if (x == 0.0) return 0.0;
  return std::pow(x, k);
}

/// log((1/n) sum x_i^t) over the positive entries; -inf when none.
inline double log_power_mean_sum(std::span<const double> log_x, std::size_t n, double t) {
  double top = -std::numeric_limits<double>::infinity();
  for (double lx : log_x) top = std::max(top, t * lx);
  if (!std::isfinite(top)) return top;
  double acc = 0.0;
  for (double lx : log_x) acc += std::exp(t * lx - top);
  return top + std::log(acc) - std::log(static_cast<double>(n));
}

}  // namespace detail

/// Cached distance structure for the denseness statistics of one graph:
/// all-pairs distances plus full shell layering. Memory is O(n^2).
class DensenessTable {
 public:
  explicit DensenessTable(const Graph& g) : g_(&g), dist_(g), shells_(g) {
    for (NodeId i = 0; i < g.size(); ++i) diameter_ = std::max(diameter_, shells_.depth(i));
  }

  const Graph& graph() const { return *g_; }
  const ShellIndex& shell_index() const { return shells_; }
  const DistanceMatrix& distances() const { return dist_; }
  std::size_t size() const { return g_->size(); }
  Distance diameter() const { return diameter_; }

  /// delta^d(s;k) = (1/n) sum_i |N^d(i;s)|^k; empty shells contribute 0.
  double delta_shell(Distance s, double k) const {
    const std::size_t n = size();
    if (n == 0) return 0.0;
    double acc = 0.0;
    for (NodeId i = 0; i < n; ++i) acc += shell_term(shells_.shell_size(i, s), k);
    return acc / static_cast<double>(n);
  }

  /// delta(s;k) = (1/n) sum_i |N(i;s)|^k.
  double delta_ball(Distance s, double k = 1.0) const {
    const std::size_t n = size();
    if (n == 0) return 0.0;
    double acc = 0.0;
    for (NodeId i = 0; i < n; ++i) acc += std::pow(static_cast<double>(shells_.ball_size(i, s)), k);
    return acc / static_cast<double>(n);
  }

  /// For each node i, max_{j in N^d(i;s)} |N(i;m) \ N(j;s-1)|, or 0 when the
  /// shell is empty. N(j;-1) is empty.
  std::vector<double> cap_maxima(Distance s, Distance m) const {
    const std::size_t n = size();
    std::vector<double> out(n, 0.0);
    for (NodeId i = 0; i < n; ++i) {
      auto shell = shells_.shell(i, s);
      if (shell.empty()) continue;
      auto ball = shells_.ball(i, m);
      if (s == 0) {
        out[i] = static_cast<double>(ball.size());
        continue;
      }
      std::size_t best = 0;
      for (NodeId j : shell) {
        std::size_t count = 0;
        for (NodeId k : ball) {
          const Distance djk = dist_(j, k);
          if (djk == kInfinity || djk >= s) ++count;
        }
        best = std::max(best, count);
      }
      out[i] = static_cast<double>(best);
    }
    return out;
  }

  /// Delta(s,m;k) = (1/n) sum_i max_{j in N^d(i;s)} |N(i;m) \ N(j;s-1)|^k.
  double delta_cap(Distance s, Distance m, double k) const {
    const std::size_t n = size();
    if (n == 0) return 0.0;
    double acc = 0.0;
    for (double x : cap_maxima(s, m)) acc += x == 0.0 ? 0.0 : std::pow(x, k);
    return acc / static_cast<double>(n);
  }

  /// c(s,m;k) = inf_{a>1} Delta(s,m;ka)^(1/a) delta^d(s; a/(a-1))^(1-1/a).
  /// s = 0 returns the a -> 1 limit delta(m;k). The infimum is taken over a
  /// 40-point log grid in (a-1) on [1e-3, 999] refined by golden section,
  /// so the result is a valid upper bound at a concrete a.
  double c_coef(Distance s, Distance m, double k) const {
    if (s == 0) return delta_ball(m, k);
    const std::size_t n = size();
    if (n == 0) return 0.0;
    std::vector<double> log_cap, log_shell;
    const auto caps = cap_maxima(s, m);
    for (NodeId i = 0; i < n; ++i) {
      if (caps[i] > 0.0) log_cap.push_back(std::log(caps[i]));
      const auto sz = shells_.shell_size(i, s);
      if (sz > 0) log_shell.push_back(std::log(static_cast<double>(sz)));
    }
    if (log_cap.empty()) return 0.0;
    return std::exp(minimize_log_holder(log_cap, log_shell, n, k));
  }

  /// Same objective as c_coef evaluated at a single a > 1 (log scale).
  double log_holder_product(Distance s, Distance m, double k, double alpha) const {
    std::vector<double> log_cap, log_shell;
    const auto caps = cap_maxima(s, m);
    for (NodeId i = 0; i < size(); ++i) {
      if (caps[i] > 0.0) log_cap.push_back(std::log(caps[i]));
      const auto sz = shells_.shell_size(i, s);
      if (sz > 0) log_shell.push_back(std::log(static_cast<double>(sz)));
    }
    return holder_objective(log_cap, log_shell, size(), k, alpha);
  }

 private:
  static double shell_term(std::size_t size, double k) {
    return size == 0 ? 0.0 : std::pow(static_cast<double>(size), k);
  }

  static double holder_objective(std::span<const double> log_cap, std::span<const double> log_shell, std::size_t n,
                                 double k, double alpha) {
    const double q = alpha / (alpha - 1.0);
    return detail::log_power_mean_sum(log_cap, n, k * alpha) / alpha +
           (1.0 - 1.0 / alpha) * detail::log_power_mean_sum(log_shell, n, q);
  }

  static double minimize_log_holder(std::span<const double> log_cap, std::span<const double> log_shell,
                                    std::size_t n, double k) {
    constexpr int kGrid = 40;
    const double lo_u = std::log(1e-3), hi_u = std::log(999.0);
    auto f = [&](double u) { return holder_objective(log_cap, log_shell, n, k, 1.0 + std::exp(u)); };
    std::array<double, kGrid> us{}, fs{};
    int best = 0;
    for (int g = 0; g < kGrid; ++g) {
      us[g] = lo_u + (hi_u - lo_u) * g / (kGrid - 1);
      fs[g] = f(us[g]);
      if (fs[g] < fs[best]) best = g;
    }
    double a = us[std::max(best - 1, 0)], b = us[std::min(best + 1, kGrid - 1)];
    const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    double result = fs[best];
    for (int it = 0; it < 200; ++it) {
      if (std::abs(b - a) <= 1e-6 * (1.0 + std::abs(a))) break;
      if (f1 < f2) {
        b = x2;
        x2 = x1;
        f2 = f1;
        x1 = b - phi * (b - a);
        f1 = f(x1);
      } else {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + phi * (b - a);
        f2 = f(x2);
      }
    }
    return std::min({result, f1, f2});
  }

  const Graph* g_;
  DistanceMatrix dist_;
  ShellIndex shells_;
  Distance diameter_ = 0;
};

inline double delta_shell(const Graph& g, Distance s, double k = 1.0) {
  detail::require(s >= 1, "delta_shell: s must be >= 1");
  const std::size_t n = g.size();
  if (n == 0) return 0.0;
  ShellWalker w(g);
  double acc = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    w.run(i, s);
    const auto sz = w.shell_size(s);
    if (sz > 0) acc += std::pow(static_cast<double>(sz), k);
  }
  return acc / static_cast<double>(n);
}

inline double delta_ball(const Graph& g, Distance s, double k = 1.0) {
  const std::size_t n = g.size();
  if (n == 0) return 0.0;
  ShellWalker w(g);
  double acc = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    w.run(i, s);
    acc += std::pow(static_cast<double>(w.ball_size(s)), k);
  }
  return acc / static_cast<double>(n);
}

inline double delta_cap(const Graph& g, Distance s, Distance m, double k) {
  return DensenessTable(g).delta_cap(s, m, k);
}

inline double c_coef(const Graph& g, Distance s, Distance m, double k) { return DensenessTable(g).c_coef(s, m, k); }

inline constexpr std::size_t kDefaultTupleLimit = 200;

/// |H(s,m)| for every s: index s holds the number of tuples (i,j,k,l) with
/// j in N(i;m), l in N(k;m), d({i,j},{k,l}) = s. The last entry counts
/// tuples at infinite distance.
inline std::vector<std::uint64_t> h_set_histogram(const Graph& g, Distance m,
                                                  std::size_t limit = kDefaultTupleLimit) {
  if (g.size() > limit) {
    throw SizeLimitExceeded("h_set_count: n=" + std::to_string(g.size()) + " exceeds tuple enumeration limit " +
                            std::to_string(limit));
  }
  const std::size_t n = g.size();
  DistanceMatrix d(g);
  ShellIndex idx(g, m);
  std::vector<std::uint64_t> hist(n + 1, 0);
  std::vector<Distance> row(n);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j : idx.ball(i, m)) {
      for (NodeId k = 0; k < n; ++k) row[k] = std::min(d(i, k), d(j, k));
      for (NodeId k = 0; k < n; ++k) {
        for (NodeId l : idx.ball(k, m)) {
          const Distance s = std::min(row[k], row[l]);
          ++hist[s == kInfinity ? n : s];
        }
      }
    }
  }
  return hist;
}

inline std::uint64_t h_set_count(const Graph& g, Distance s, Distance m, std::size_t limit = kDefaultTupleLimit) {
  auto hist = h_set_histogram(g, m, limit);
  return s < hist.size() - 1 ? hist[s] : 0;
}

/// Scalar network summaries in the layout of the Monte Carlo tables.
struct NetworkSummary {
  std::size_t n = 0;
  double avg_degree = 0.0;
  std::size_t max_degree = 0;
  Distance diameter = 0;                // max finite pairwise distance
  double avg_connected_distance = 0.0;  // mean d(i,j) over connected i < j
  std::size_t connected_pairs = 0;
};

inline NetworkSummary table1_stats(const Graph& g) {
  NetworkSummary out;
  out.n = g.size();
  out.avg_degree = g.average_degree();
  out.max_degree = g.max_degree();
  ShellWalker w(g);
  double dist_sum = 0.0;
  std::size_t pairs = 0;
  for (NodeId i = 0; i < g.size(); ++i) {
    w.run(i);
    out.diameter = std::max(out.diameter, w.depth());
    for (Distance s = 1; s <= w.depth(); ++s) {
      const auto sz = w.shell_size(s);
      dist_sum += static_cast<double>(s) * static_cast<double>(sz);
      pairs += sz;
    }
  }
  out.connected_pairs = pairs / 2;
  out.avg_connected_distance = pairs == 0 ? 0.0 : dist_sum / static_cast<double>(pairs);
  return out;
}

/// Everything the `stats` command reports for one graph.
struct DensenessProfile {
  NetworkSummary summary;
  Distance m = 0;
  std::vector<double> k_values;
  std::vector<std::vector<double>> delta_shell;  // [s][k index], s = 0..diameter
  std::vector<double> delta_ball;                // [s]
  std::vector<double> delta_cap;                 // [s] at radius m, first k
  std::vector<double> c_coef;                    // [s] at radius m, first k
};

inline DensenessProfile denseness_profile(const Graph& g, Distance m, std::vector<double> k_values = {1.0, 2.0}) {
  detail::require(!k_values.empty(), "denseness_profile: need at least one k");
  DensenessTable t(g);
  DensenessProfile p;
  p.summary = table1_stats(g);
  p.m = m;
  p.k_values = std::move(k_values);
  for (Distance s = 0; s <= t.diameter(); ++s) {
    std::vector<double> row;
    for (double k : p.k_values) row.push_back(t.delta_shell(s, k));
    p.delta_shell.push_back(std::move(row));
    p.delta_ball.push_back(t.delta_ball(s));
    p.delta_cap.push_back(t.delta_cap(s, m, p.k_values.front()));
    p.c_coef.push_back(t.c_coef(s, m, p.k_values.front()));
  }
  return p;
}

/// Finite-n values of the denseness/dependence conditions.
struct ConditionReport {
  double p = 0.0;
  Distance m_n = 0;
  double bandwidth = 0.0;
  double nd_a_value = 0.0;                 // n^{3/2} theta_{m_n}^{1-1/p}
  std::array<double, 2> nd_b_value{};      // k = 1, 2
  double nf_q_threshold = 0.0;             // max{p/(p-4), 3p/(p-1)}
  double hac_iii_value = 0.0;              // n^{-1} sum_s c(s,b_n;2) theta_s^{1-4/p}
  double lln_value = 0.0;                  // n^{-1} sum_{s>=1} delta^d(s) theta_s
};

inline double nf_q_threshold(double p) {
  detail::require(p > 4.0, "nf_q_threshold: p must exceed 4");
  return std::max(p / (p - 4.0), 3.0 * p / (p - 1.0));
}

/// Neighbourhood radius m_n = log n / (2(1+e') log((pi_n v 1)+e')).
inline double default_m_n(std::size_t n, double pi_n, double eps_prime) {
  detail::require(n >= 2 && eps_prime > 0.0, "default_m_n: need n >= 2 and eps' > 0");
  return std::log(static_cast<double>(n)) /
         (2.0 * (1.0 + eps_prime) * std::log(std::max(pi_n, 1.0) + eps_prime));
}

/// n^{-1} sum_{s>=1} delta^d(s) theta_s, the LLN denseness sum.
inline double lln_denseness_sum(const Graph& g, const ThetaSequence& theta) {
  const std::size_t n = g.size();
  if (n == 0) return 0.0;
  ShellWalker w(g);
  std::vector<double> shell_total;
  for (NodeId i = 0; i < n; ++i) {
    w.run(i);
    if (shell_total.size() <= w.depth()) shell_total.resize(w.depth() + 1, 0.0);
    for (Distance s = 1; s <= w.depth(); ++s) shell_total[s] += static_cast<double>(w.shell_size(s));
  }
  double acc = 0.0;
  for (Distance s = 1; s < shell_total.size(); ++s) acc += shell_total[s] / static_cast<double>(n) * theta(s);
  return acc / static_cast<double>(n);
}

inline ConditionReport condition_report(const DensenessTable& t, const ThetaSequence& theta, double p, Distance m_n,
                                        double bandwidth) {
  if (!(p > 4.0)) throw InvalidArgument("condition_report: p must exceed 4");
  detail::require(bandwidth >= 0.0, "condition_report: bandwidth must be nonnegative");
  const auto n = static_cast<double>(t.size());
  ConditionReport r;
  r.p = p;
  r.m_n = m_n;
  r.bandwidth = bandwidth;
  r.nf_q_threshold = nf_q_threshold(p);
  r.nd_a_value = std::pow(n, 1.5) * detail::pow0(theta(m_n), 1.0 - 1.0 / p);
  const auto b_lag = static_cast<Distance>(std::floor(bandwidth));
  for (int k = 1; k <= 2; ++k) {
    double acc = 0.0;
    for (Distance s = 0; s <= t.diameter(); ++s) {
      const double th = detail::pow0(theta(s), 1.0 - (k + 2.0) / p);
      if (th == 0.0) continue;
      acc += t.c_coef(s, m_n, k) * th;
    }
    r.nd_b_value[k - 1] = acc / std::pow(n, k / 2.0);
  }
  double hac = 0.0, lln = 0.0;
  for (Distance s = 0; s <= t.diameter(); ++s) {
    const double th = detail::pow0(theta(s), 1.0 - 4.0 / p);
    if (th != 0.0) hac += t.c_coef(s, b_lag, 2.0) * th;
    if (s >= 1) lln += t.delta_shell(s, 1.0) * theta(s);
  }
  r.hac_iii_value = hac / n;
  r.lln_value = lln / n;
  return r;
}

inline ConditionReport condition_report(const Graph& g, const ThetaSequence& theta, double p, Distance m_n,
                                        double bandwidth) {
  if (!(p > 4.0)) throw InvalidArgument("condition_report: p must exceed 4");
  return condition_report(DensenessTable(g), theta, p, m_n, bandwidth);
}

/// Outcome of checking delta^d(s;k) <= (5.7 s^2 (pi v 1)^s log n)^k over a
/// batch of graphs.
struct TailBoundResult {
  std::size_t draws = 0;
  std::size_t violations = 0;
  double rate = 0.0;
  double allowed_rate = 0.0;  // n^{-1.3} at the first graph's size
};

inline double shell_tail_bound(std::size_t n, Distance s, double k, double pi_n) {
  return std::pow(5.7 * static_cast<double>(s) * static_cast<double>(s) *
                      std::pow(std::max(pi_n, 1.0), static_cast<double>(s)) * std::log(static_cast<double>(n)),
                  k);
}

/// Per-graph pi_n variant.
inline TailBoundResult tail_bound_monitor(std::span<const Graph> graphs, std::span<const double> pi_n, Distance s,
                                          double k) {
  if (graphs.empty()) throw InvalidArgument("tail_bound_monitor: empty sample list");
  detail::require(s >= 1, "tail_bound_monitor: the shell bound covers s >= 1 only");
  detail::require(pi_n.size() == graphs.size(), "tail_bound_monitor: one pi_n per graph");
  TailBoundResult r;
  r.draws = graphs.size();
  for (std::size_t g = 0; g < graphs.size(); ++g) {
    if (delta_shell(graphs[g], s, k) > shell_tail_bound(graphs[g].size(), s, k, pi_n[g])) ++r.violations;
  }
  r.rate = static_cast<double>(r.violations) / static_cast<double>(r.draws);
  r.allowed_rate = std::pow(static_cast<double>(graphs.front().size()), -1.3);
  return r;
}

inline TailBoundResult tail_bound_monitor(std::span<const Graph> graphs, Distance s, double k, double pi_n) {
  std::vector<double> pis(graphs.size(), pi_n);
  return tail_bound_monitor(graphs, std::span<const double>(pis), s, k);
}

}  // namespace nethac

#endif  // NETHAC_NETSTATS_HPP
