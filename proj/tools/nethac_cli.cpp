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

// nethac command-line tool: stats, estimate, simulate, mc, verify.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nethac/clique.hpp"
#include "nethac/dgp.hpp"
#include "nethac/edge_list.hpp"
#include "nethac/embedding.hpp"
#include "nethac/fixtures.hpp"
#include "nethac/hac.hpp"
#include "nethac/kernels.hpp"
#include "nethac/montecarlo.hpp"
#include "nethac/netstats.hpp"
#include "nethac/sample_io.hpp"
#include "nethac/theta.hpp"
#include "nethac/verify.hpp"

namespace {

using nethac::Distance;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

ordered_json to_json(const Eigen::MatrixXd& m) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

ordered_json to_json(const nethac::NetworkSummary& s) {
  return {{"n", s.n},
          {"avgDegree", s.avg_degree},
          {"maxDegree", s.max_degree},
          {"diameter", s.diameter},
          {"avgConnectedDistance", s.avg_connected_distance},
          {"connectedPairs", s.connected_pairs}};
}

ordered_json to_json(const nethac::Dispersion& d) { return {{"mean", d.mean}, {"sd", d.sd}}; }

ordered_json to_json(const nethac::McCell& c) {
  return {{"lambda", c.lambda},   {"n", c.n},
          {"gamma", c.gamma},     {"bwConstant", c.bw_constant},
          {"bwEpsilon", c.bw_epsilon}, {"kernel", nethac::to_string(c.kernel)},
          {"reps", c.reps},       {"seed", c.seed},
          {"missingProb", c.missing_prob}, {"level", c.level}};
}

ordered_json to_json(const nethac::McReport& r) {
  return {{"cell", to_json(r.cell)},
          {"validReps", r.valid_reps},
          {"negVarCount", r.neg_var_count},
          {"coverage", r.coverage},
          {"coverageSe", r.coverage_se},
          {"rejection", r.rejection},
          {"coverageAll", r.coverage_all},
          {"diameter", to_json(r.diameter)},
          {"avgDegree", to_json(r.avg_degree)},
          {"maxDegree", to_json(r.max_degree)},
          {"avgConnectedDistance", to_json(r.avg_distance)},
          {"bandwidth", to_json(r.bandwidth)},
          {"medianRelError", r.median_rel_error},
          {"meanVHat", r.mean_v_hat},
          {"meanVTrue", r.mean_v_true}};
}

void emit(const ordered_json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream os(out);
  if (!os) throw nethac::ParseError("cannot write '" + out + "'");
  os << j.dump(2) << '\n';
}

/// Edge-list path, or a fixture name such as ring(10).
nethac::Graph load_graph(const std::string& spec) {
  if (fs::exists(spec)) return nethac::read_edge_list(spec);
  try {
    return nethac::fixtures::fixture(spec);
  } catch (const nethac::InvalidArgument&) {
    throw nethac::ParseError("no edge-list file or fixture named '" + spec + "'");
  }
}

struct BandwidthOptions {
  double constant = 2.0;
  double epsilon = 0.05;
  std::optional<double> explicit_bandwidth;

  void add(CLI::App* app) {
    app->add_option("--bw-constant", constant, "Bandwidth rule constant")->capture_default_str();
    app->add_option("--bw-epsilon", epsilon, "Bandwidth rule epsilon")->capture_default_str();
    app->add_option("--bandwidth", explicit_bandwidth, "Explicit bandwidth (overrides the rule)");
  }
  double resolve(const nethac::Graph& g) const {
    if (explicit_bandwidth) return *explicit_bandwidth;
    return nethac::bandwidth({constant, epsilon}, g.size(), g.average_degree());
  }
};

// ---------------------------------------------------------------- stats

struct StatsOptions {
  std::string graph;
  Distance m = 1;
  std::vector<double> k_values{1.0, 2.0};
  std::optional<std::string> theta;
  double p = 8.0;
  std::optional<Distance> m_n;
  BandwidthOptions bw;
  std::string out;
};

void run_stats(const StatsOptions& o) {
  const nethac::Graph g = load_graph(o.graph);
  const nethac::DensenessTable table(g);
  const auto prof = nethac::denseness_profile(g, o.m, o.k_values);
  ordered_json j;
  j["summary"] = to_json(prof.summary);
  j["m"] = prof.m;
  j["kValues"] = prof.k_values;
  j["deltaShell"] = prof.delta_shell;
  j["deltaBall"] = prof.delta_ball;
  j["deltaCap"] = prof.delta_cap;
  j["cCoef"] = prof.c_coef;
  const double b = o.bw.resolve(g);
  j["bandwidth"] = b;
  if (g.size() <= nethac::kDefaultCliqueLimit) j["cliqueNumber"] = nethac::clique_number(g);
  if (o.theta) {
    const auto theta = nethac::ThetaSequence::parse(*o.theta);
    const Distance m_n = o.m_n ? *o.m_n : o.m;
    const auto r = nethac::condition_report(table, theta, o.p, m_n, b);
    j["conditionReport"] = {{"theta", theta.describe()},
                            {"p", r.p},
                            {"mN", r.m_n},
                            {"bandwidth", r.bandwidth},
                            {"ndA", r.nd_a_value},
                            {"ndB", r.nd_b_value},
                            {"nfQThreshold", r.nf_q_threshold},
                            {"hacIii", r.hac_iii_value},
                            {"lln", r.lln_value}};
  }
  emit(j, o.out);
}

// ------------------------------------------------------------- estimate

struct EstimateOptions {
  std::string graph;
  std::string sample;
  std::string kernel = "parzen";
  BandwidthOptions bw;
  std::string mean = "unknown";
  std::vector<double> known_mean;
  double level = 0.95;
  double missing_prob = 0.0;
  std::uint64_t seed = 1;
  std::string out;
};

void run_estimate(const EstimateOptions& o) {
  nethac::Graph g = load_graph(o.graph);
  const Eigen::MatrixXd y = nethac::read_sample_csv(o.sample);
  if (static_cast<std::size_t>(y.rows()) != g.size()) {
    throw nethac::InvalidArgument("estimate: sample has " + std::to_string(y.rows()) + " rows, graph has " +
                                  std::to_string(g.size()) + " nodes");
  }
  if (o.missing_prob > 0.0) {
    nethac::Rng rng = nethac::make_rng(o.seed);
    g = nethac::delete_edges(g, o.missing_prob, rng);
  }
  const auto kernel = nethac::parse_kernel(o.kernel);
  const nethac::KernelSpec spec{kernel, o.bw.resolve(g)};
  const bool known = o.mean == "known";
  if (!known && o.mean != "unknown") throw nethac::InvalidArgument("--mean must be 'known' or 'unknown'");
  std::optional<Eigen::VectorXd> mu;
  if (known) {
    Eigen::VectorXd m = Eigen::VectorXd::Zero(y.cols());
    if (!o.known_mean.empty()) {
      if (o.known_mean.size() != static_cast<std::size_t>(y.cols())) {
        throw nethac::InvalidArgument("--known-mean needs one value per column");
      }
      for (Eigen::Index k = 0; k < y.cols(); ++k) m(k) = o.known_mean[k];
    }
    mu = m;
  }
  const nethac::Sample x(y, mu);
  x.validate();
  const auto r = nethac::hac_partial(g, x, spec, known ? nethac::MeanMode::known_mean : nethac::MeanMode::unknown_mean);
  ordered_json j;
  j["n"] = x.n();
  j["v"] = x.v();
  j["kernel"] = nethac::to_string(kernel);
  j["bandwidth"] = r.bandwidth;
  j["meanMode"] = o.mean;
  j["missingProb"] = o.missing_prob;
  j["observedEdges"] = g.edge_count();
  const Eigen::VectorXd ybar = x.mean();
  j["mean"] = std::vector<double>(ybar.begin(), ybar.end());
  j["V"] = to_json(r.v);
  ordered_json lags = ordered_json::array();
  for (std::size_t s = 0; s < r.lag_covariances.size(); ++s) {
    lags.push_back({{"s", s}, {"weight", r.weights[s]}, {"trace", r.lag_covariances[s].trace()}});
  }
  j["lags"] = lags;
  j["psdFlag"] = r.psd;
  j["minEigenvalue"] = r.min_eigenvalue;
  if (x.v() == 1) {
    const double v = r.v(0, 0);
    if (v < 0.0) {
      j["ci"] = nullptr;
      j["error"] = "indefinite HAC estimate: V = " + std::to_string(v);
    } else {
      const auto ci = nethac::confidence_interval(x, v, o.level);
      j["ci"] = {{"level", o.level}, {"lower", ci.lower}, {"upper", ci.upper}};
      if (v > 0.0) j["tStatistic"] = nethac::t_statistic(x.mean()(0), v, x.n());
    }
  }
  emit(j, o.out);
}

// ------------------------------------------------------------- simulate

struct SimulateOptions {
  std::size_t n = 500;
  double lambda = 1.0;
  double gamma = 0.0;
  std::uint64_t seed = 1;
  std::size_t reps = 1;
  double missing_prob = 0.0;
  std::string out = "sim";
};

void run_simulate(const SimulateOptions& o) {
  nethac::detail::require(o.reps >= 1, "simulate: --reps must be at least 1");
  fs::create_directories(o.out);
  ordered_json manifest = {{"n", o.n},         {"lambda", o.lambda}, {"gamma", o.gamma},
                           {"seed", o.seed},   {"reps", o.reps},     {"missingProb", o.missing_prob},
                           {"replications", ordered_json::array()}};
  for (std::size_t r = 0; r < o.reps; ++r) {
    nethac::McCell cell;
    cell.lambda = o.lambda;
    cell.n = o.n;
    cell.gamma = o.gamma;
    cell.seed = o.seed;
    cell.missing_prob = o.missing_prob;
    cell.validate();
    // same stream layout as the Monte Carlo study
    nethac::Rng rng = nethac::make_rng(nethac::replication_seed(cell, r));
    auto formed = nethac::form_network(o.n, o.lambda, rng);
    nethac::LinearMap map(formed.graph, nethac::LinearModelSpec{o.gamma});
    auto eps = nethac::standard_normal_shocks(o.n, rng);
    Eigen::MatrixXd y(o.n, 1);
    std::vector<double> yv(o.n);
    map.apply(eps, yv);
    for (std::size_t i = 0; i < o.n; ++i) y(i, 0) = yv[i];
    const std::string tag = fmt::format("{:04}", r);
    const auto edges = (fs::path(o.out) / ("network_" + tag + ".edges")).string();
    const auto sample = (fs::path(o.out) / ("sample_" + tag + ".csv")).string();
    nethac::write_edge_list(edges, formed.graph);
    nethac::write_sample_csv(sample, y);
    ordered_json entry = {{"rep", r},
                          {"edges", edges},
                          {"sample", sample},
                          {"piN", formed.pi_n},
                          {"vN", nethac::exact_variance_oracle(formed.graph, nethac::LinearModelSpec{o.gamma})},
                          {"summary", to_json(nethac::table1_stats(formed.graph))}};
    if (o.missing_prob > 0.0) {
      const auto observed = (fs::path(o.out) / ("observed_" + tag + ".edges")).string();
      nethac::write_edge_list(observed, nethac::delete_edges(formed.graph, o.missing_prob, rng));
      entry["observedEdges"] = observed;
    }
    manifest["replications"].push_back(entry);
  }
  emit(manifest, (fs::path(o.out) / "manifest.json").string());
  std::cout << "wrote " << o.reps << " replication(s) to " << o.out << '\n';
}

// ------------------------------------------------------------------- mc

struct McOptions {
  std::optional<std::string> config;
  std::vector<double> lambdas;
  std::vector<std::size_t> ns;
  std::vector<double> gammas;
  std::vector<double> constants;
  std::optional<std::size_t> reps;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> kernel;
  std::optional<double> bw_epsilon;
  std::optional<double> missing_prob;
  bool full = false;
  std::size_t workers = nethac::default_workers();
  std::string out = ".";
};

template <class T>
void take(const ordered_json& j, const char* key, T& dst) {
  if (j.contains(key)) dst = j.at(key).get<T>();
}

template <class T>
void take_list(const ordered_json& j, const char* key, std::vector<T>& dst) {
  if (!j.contains(key)) return;
  const auto& v = j.at(key);
  dst = v.is_array() ? v.get<std::vector<T>>() : std::vector<T>{v.get<T>()};
}

void run_mc(McOptions o) {
  nethac::McCell base;
  // desk scale by default; --full selects the large design
  std::vector<double> lambdas{1, 2, 3, 4, 5}, gammas{0.0, 0.1, 0.2, 0.3, 0.4, 0.5}, constants{2.0};
  std::vector<std::size_t> ns{500, 1000};
  if (o.full) {
    base.reps = 10000;
    ns = {500, 1000, 5000};
    constants = {1.7, 1.8, 1.9, 2.0, 2.1, 2.2};
  }
  if (o.config) {
    std::ifstream is(*o.config);
    if (!is) throw nethac::ParseError("cannot open config '" + *o.config + "'");
    const ordered_json j = ordered_json::parse(is);
    take_list(j, "lambda", lambdas);
    take_list(j, "n", ns);
    take_list(j, "gamma", gammas);
    take_list(j, "bwConstant", constants);
    take(j, "bwEpsilon", base.bw_epsilon);
    take(j, "reps", base.reps);
    take(j, "seed", base.seed);
    take(j, "missingProb", base.missing_prob);
    take(j, "level", base.level);
    if (j.contains("kernel")) base.kernel = nethac::parse_kernel(j.at("kernel").get<std::string>());
  }
  if (!o.lambdas.empty()) lambdas = o.lambdas;
  if (!o.ns.empty()) ns = o.ns;
  if (!o.gammas.empty()) gammas = o.gammas;
  if (!o.constants.empty()) constants = o.constants;
  if (o.reps) base.reps = *o.reps;
  if (o.seed) base.seed = *o.seed;
  if (o.kernel) base.kernel = nethac::parse_kernel(*o.kernel);
  if (o.bw_epsilon) base.bw_epsilon = *o.bw_epsilon;
  if (o.missing_prob) base.missing_prob = *o.missing_prob;

  const auto cells = nethac::make_grid(lambdas, ns, gammas, constants, base);
  const auto reports = nethac::run_grid(cells, o.workers);
  fs::create_directories(o.out);
  const auto csv_path = fs::path(o.out) / "study.csv";
  {
    std::ofstream os(csv_path, std::ios::binary);
    if (!os) throw nethac::ParseError("cannot write '" + csv_path.string() + "'");
    nethac::write_study_csv(os, reports);
  }
  ordered_json j = {{"cells", ordered_json::array()}};
  for (const auto& r : reports) j["cells"].push_back(to_json(r));
  emit(j, (fs::path(o.out) / "study.json").string());
  std::cout << "wrote " << reports.size() << " cell(s) to " << csv_path.string() << '\n';
}

// --------------------------------------------------------------- verify

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t reps = 20000;
  std::size_t workers = nethac::default_workers();
  std::string out;
};

void run_verify(const VerifyOptions& o) {
  ordered_json ledger = ordered_json::array();
  bool all = true;
  auto record = [&](const std::string& name, bool pass, ordered_json detail) {
    all = all && pass;
    ledger.push_back({{"property", name}, {"pass", pass}, {"detail", std::move(detail)}});
  };
  using namespace nethac;

  {
    const double b = bandwidth({2.0, 0.05}, 1000, 3.0);
    record("bandwidth_rule_example", std::abs(b - 12.575) <= 0.005, {{"bandwidth", b}});
  }
  {
    double worst = 0.0;
    for (std::size_t n = 7; n <= 25; ++n)
      for (Distance m = 1; 2 * m + 2 <= n; ++m) {
        Rng rng = make_rng(derive_seed(o.seed, {n, m}));
        std::normal_distribution<double> z;
        Eigen::MatrixXd y(n, 1);
        for (std::size_t i = 0; i < n; ++i) y(i, 0) = 0.5 + z(rng);
        Sample x(y, Eigen::VectorXd::Zero(1));
        const KernelSpec spec{KernelFamily::bartlett, static_cast<double>(m + 1)};
        const double diff = hac_known_mean(fixtures::ring(n), x, spec).v(0, 0) -
                            hac_unknown_mean(fixtures::ring(n), x, spec).v(0, 0);
        const double target = x.mean()(0) * x.mean()(0) * (1.0 + m);
        worst = std::max(worst, std::abs(diff - target) / target);
      }
    record("ring_identity_one_plus_m", worst <= 1e-10, {{"maxRelError", worst}});
  }
  {
    std::size_t checks = 0, bad = 0;
    for (std::uint64_t k = 0; k < 40; ++k) {
      Rng rng = make_rng(derive_seed(o.seed, {100, k}));
      const std::size_t n = 8 + k % 25;
      std::bernoulli_distribution coin(2.5 / static_cast<double>(n));
      std::vector<Edge> e;
      for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
          if (coin(rng)) e.emplace_back(i, j);
      Graph g(n, e);
      DensenessTable t(g);
      for (Distance m = 1; m <= 3; ++m) {
        auto hist = h_set_histogram(g, m);
        for (Distance s = 0; s <= t.diameter(); ++s, ++checks)
          if (static_cast<double>(hist[s]) > 4.0 * static_cast<double>(n) * t.c_coef(s, m, 2.0) * (1 + 1e-9) + 1e-9)
            ++bad;
      }
    }
    record("h_set_bound", bad == 0, {{"checks", checks}, {"violations", bad}});
  }
  {
    const double gap = std::abs(kernel_eval(KernelFamily::parzen, std::nextafter(0.5, 1.0)) -
                                kernel_eval(KernelFamily::parzen, std::nextafter(0.5, 0.0)));
    record("parzen_continuity", gap <= 1e-12, {{"gap", gap}});
    const auto reg = kernel_regularity(KernelFamily::parzen, 1.0);
    record("parzen_regularity", !reg.violation, {{"cEstimate", reg.c_estimate}});
  }
  {
    auto chord = find_indefinite_chord(fixtures::ring(8), {KernelFamily::bartlett, 3.0});
    record("indefinite_weight_matrix_exists", chord.found,
           {{"chord", {chord.chord.first, chord.chord.second}}, {"minEigenvalue", chord.min_eigenvalue}});
  }
  {
    record("fig1_clique_number", clique_number(fixtures::fig1()) == 2, {{"cliqueNumber", clique_number(fixtures::fig1())}});
    const auto k4 = embedding_check(fixtures::complete(4), {SpaceKind::euclidean, 2}, {.restarts = 20});
    record("k4_not_embeddable_in_plane", !k4.necessary_condition_holds,
           {{"cliqueNumber", k4.clique_number}, {"equilateralDim", k4.equilateral_dim}});
  }
  {
    std::vector<Distance> lags{1, 2, 3, 4, 5, 6};
    const auto r = psi_bound_check(fixtures::ring(60), 0.5, lags, o.reps, o.seed, o.workers);
    ordered_json rows = ordered_json::array();
    for (const auto& x : r.rows)
      rows.push_back({{"s", x.s}, {"cov", x.cov}, {"se", x.cov_se}, {"bound", x.bound}, {"violated", x.violated}});
    record("psi_bound_ring60", !r.any_violation, {{"cNeeded", r.c_needed}, {"rows", rows}});
  }
  {
    const auto r = product_bound_check(fixtures::ring(30), 0.4, 0, 3, 4, o.reps, o.seed, 8.0, 8.0, o.workers);
    record("product_bound_gaussian_pair", !r.violated, {{"cov", r.cov}, {"se", r.cov_se}, {"bound", r.bound}});
  }
  {
    const auto a = lln_diagnostic(fixtures::ring(1000), DgpKind::linear(0.0), 1000, o.seed, o.workers);
    const double scaled = a.l1_deviation * std::sqrt(1000.0);
    record("lln_iid_rate", std::abs(scaled - kStdNormalAbsMean) <= 0.2 * kStdNormalAbsMean,
           {{"sqrtNTimesL1", scaled}, {"target", kStdNormalAbsMean}});
    const auto s = lln_diagnostic(fixtures::star(1000), DgpKind::star_shock(), 1000, o.seed, o.workers);
    record("lln_star_common_shock_persists", s.l1_deviation > 0.5, {{"l1", s.l1_deviation}});
  }
  {
    const auto d = clt_diagnostic(FormationSpec{1000, 3.0, o.seed}, DgpKind::linear(0.3), 5000, o.seed, o.workers);
    record("clt_ks_formation", d.ks_statistic < 2.0 * d.ks_critical,
           {{"ks", d.ks_statistic}, {"critical", d.ks_critical}});
  }
  emit({{"allPass", all}, {"properties", ledger}}, o.out);
  if (!all) throw nethac::Error("verify: at least one property failed");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nethac: network HAC inference, denseness statistics and simulation"};
  app.require_subcommand(1);

  StatsOptions so;
  auto* stats = app.add_subcommand("stats", "Network statistics, denseness profile and condition report");
  stats->add_option("graph", so.graph, "Edge-list file or fixture name, e.g. ring(10)")->required();
  stats->add_option("--m", so.m, "Cap radius for caps and c coefficients")->capture_default_str();
  stats->add_option("--k", so.k_values, "Shell power exponents")->delimiter(',');
  stats->add_option("--theta", so.theta, "Dependence coefficients, e.g. geometric:0.5");
  stats->add_option("--p", so.p, "Moment order p > 4")->capture_default_str();
  stats->add_option("--m-n", so.m_n, "m_n for the condition report (default --m)");
  so.bw.add(stats);
  stats->add_option("--out", so.out, "Output JSON file (default stdout)");
  stats->callback([&] { run_stats(so); });

  EstimateOptions eo;
  auto* est = app.add_subcommand("estimate", "Network HAC variance estimate for a sample");
  est->add_option("graph", eo.graph, "Edge-list file or fixture name")->required();
  est->add_option("sample", eo.sample, "Sample CSV with header y1..yv")->required();
  est->add_option("--kernel", eo.kernel, "parzen|bartlett|truncated|tukey-hanning")->capture_default_str();
  eo.bw.add(est);
  est->add_option("--mean", eo.mean, "known|unknown")->capture_default_str();
  est->add_option("--known-mean", eo.known_mean, "Known mean vector (default 0)")->delimiter(',');
  est->add_option("--level", eo.level, "Confidence level")->capture_default_str();
  est->add_option("--missing-prob", eo.missing_prob, "Hide each edge with this probability")->capture_default_str();
  est->add_option("--seed", eo.seed, "Seed for edge deletion")->capture_default_str();
  est->add_option("--out", eo.out, "Output JSON file (default stdout)");
  est->callback([&] { run_estimate(eo); });

  SimulateOptions sim;
  auto* simc = app.add_subcommand("simulate", "Draw networks and linear-model samples");
  simc->add_option("--n", sim.n)->capture_default_str();
  simc->add_option("--lambda", sim.lambda)->capture_default_str();
  simc->add_option("--gamma", sim.gamma)->capture_default_str();
  simc->add_option("--seed", sim.seed)->capture_default_str();
  simc->add_option("--reps", sim.reps)->capture_default_str();
  simc->add_option("--missing-prob", sim.missing_prob, "Also write an observed subgraph")->capture_default_str();
  simc->add_option("--out", sim.out, "Output directory")->capture_default_str();
  simc->callback([&] { run_simulate(sim); });

  McOptions mo;
  auto* mc = app.add_subcommand("mc", "Monte Carlo coverage study; writes study.csv and study.json");
  mc->add_option("--config", mo.config, "JSON config with McCell fields; list values span the grid");
  mc->add_option("--lambda", mo.lambdas)->delimiter(',');
  mc->add_option("--n", mo.ns)->delimiter(',');
  mc->add_option("--gamma", mo.gammas)->delimiter(',');
  mc->add_option("--bw-constant", mo.constants)->delimiter(',');
  mc->add_option("--bw-epsilon", mo.bw_epsilon);
  mc->add_option("--kernel", mo.kernel);
  mc->add_option("--reps", mo.reps);
  mc->add_option("--seed", mo.seed);
  mc->add_option("--missing-prob", mo.missing_prob);
  mc->add_flag("--full", mo.full, "Large design: 10000 reps, n up to 5000, six constants");
  mc->add_option("--workers", mo.workers)->capture_default_str();
  mc->add_option("--out", mo.out, "Output directory")->capture_default_str();
  mc->callback([&] { run_mc(mo); });

  VerifyOptions vo;
  auto* ver = app.add_subcommand("verify", "Property checks; JSON pass/fail ledger");
  ver->add_option("--seed", vo.seed)->capture_default_str();
  ver->add_option("--reps", vo.reps, "Replications for covariance checks")->capture_default_str();
  ver->add_option("--workers", vo.workers)->capture_default_str();
  ver->add_option("--out", vo.out, "Output JSON file (default stdout)");
  ver->callback([&] { run_verify(vo); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const nethac::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
