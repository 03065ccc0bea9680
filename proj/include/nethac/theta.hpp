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

#ifndef NETHAC_THETA_HPP
#define NETHAC_THETA_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nethac/error.hpp"
#include "nethac/graph.hpp"

namespace nethac {

/// Dependence coefficients theta_s as a function of network distance s.
/// theta_0 = 1 for every kind.
class ThetaSequence {
 public:
  enum class Kind { geometric, nf_rate, table, zero_beyond, linear_model };

  /// theta_s = gamma^s.
  static ThetaSequence geometric(double gamma) {
    detail::require(gamma >= 0.0, "theta: geometric rate must be nonnegative");
    ThetaSequence t(Kind::geometric);
    t.params_ = {gamma};
    return t;
  }

  /// theta_s = M ((pi_n v 1) + eps)^(-q s): the link-formation rate bound.
  static ThetaSequence nf_rate(double M, double q, double eps, double pi_n) {
    detail::require(M >= 0.0 && q > 0.0 && eps > 0.0 && pi_n >= 0.0, "theta: bad nf_rate parameters");
    ThetaSequence t(Kind::nf_rate);
    t.params_ = {M, q, eps, pi_n};
    return t;
  }

  /// Explicit values for s = 1, 2, ...; zero past the end of the table.
  static ThetaSequence table(std::vector<double> values_from_one) {
    for (double v : values_from_one) detail::require(v >= 0.0 && std::isfinite(v), "theta: table entries must be finite and >= 0");
    ThetaSequence t(Kind::table);
    t.params_ = std::move(values_from_one);
    return t;
  }

  /// Dependency-graph coefficients: 1 below s0, 0 from s0 on.
  static ThetaSequence zero_beyond(Distance s0) {
    ThetaSequence t(Kind::zero_beyond);
    t.cutoff_ = s0;
    return t;
  }

  /// Tail bound for a linear moving-average process with i.i.d. shocks:
  /// theta_s = 2 alpha sum_{m>s} gamma^m max_i |N^d(i;m)|.
  /// `max_shell[m]` is the largest distance-m shell over all nodes.
  static ThetaSequence linear_model(double gamma, std::vector<std::size_t> max_shell, double alpha) {
    detail::require(gamma >= 0.0 && gamma < 1.0, "theta: linear_model needs gamma in [0,1)");
    detail::require(alpha >= 0.0, "theta: alpha must be nonnegative");
    ThetaSequence t(Kind::linear_model);
    // tail[s] = 2 alpha sum_{m>s} gamma^m max_shell[m], accumulated from the far end
    std::vector<double> tail(max_shell.size(), 0.0);
    double acc = 0.0;
    for (std::size_t s = max_shell.size(); s-- > 0;) {
      tail[s] = 2.0 * alpha * acc;
      acc += std::pow(gamma, static_cast<double>(s)) * static_cast<double>(max_shell[s]);
    }
    t.params_ = std::move(tail);
    t.gamma_ = gamma;
    return t;
  }

  /// Parses "geometric:0.5", "zero_beyond:2", "nf_rate:M,q,eps,pi",
  /// "table:0.5,0.2,0.1".
  static ThetaSequence parse(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw InvalidArgument("theta: expected kind:params, got '" + std::string(text) + "'");
    const std::string kind(text.substr(0, colon));
    std::vector<double> v;
    std::stringstream ss{std::string(text.substr(colon + 1))};
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        v.push_back(std::stod(tok));
      } catch (const std::exception&) {
        throw InvalidArgument("theta: bad number '" + tok + "'");
      }
    }
    auto need = [&](std::size_t c) {
      if (v.size() != c) throw InvalidArgument("theta: '" + kind + "' takes " + std::to_string(c) + " parameter(s)");
    };
    if (kind == "geometric") {
      need(1);
      return geometric(v[0]);
    }
    if (kind == "zero_beyond") {
      need(1);
      return zero_beyond(static_cast<Distance>(v[0]));
    }
    if (kind == "nf_rate") {
      need(4);
      return nf_rate(v[0], v[1], v[2], v[3]);
    }
    if (kind == "table") return table(v);
    throw InvalidArgument("theta: unknown kind '" + kind + "'");
  }

  Kind kind() const { return kind_; }

  double operator()(Distance s) const {
    if (s == 0) return 1.0;
    switch (kind_) {
      case Kind::geometric: return std::pow(params_[0], static_cast<double>(s));
      case Kind::nf_rate:
        return params_[0] * std::pow(std::max(params_[3], 1.0) + params_[2], -params_[1] * static_cast<double>(s));
      case Kind::table: return s <= params_.size() ? params_[s - 1] : 0.0;
      case Kind::zero_beyond: return s < cutoff_ ? 1.0 : 0.0;
      case Kind::linear_model: return s < params_.size() ? params_[s] : 0.0;
    }
    return 0.0;
  }

  std::string describe() const {
    std::ostringstream os;
    switch (kind_) {
      case Kind::geometric: os << "geometric(" << params_[0] << ")"; break;
      case Kind::nf_rate:
        os << "nf_rate(M=" << params_[0] << ",q=" << params_[1] << ",eps=" << params_[2] << ",pi=" << params_[3] << ")";
        break;
      case Kind::table: os << "table(" << params_.size() << " values)"; break;
      case Kind::zero_beyond: os << "zero_beyond(" << cutoff_ << ")"; break;
      case Kind::linear_model: os << "linear_model(gamma=" << gamma_ << ")"; break;
    }
    return os.str();
  }

 private:
  explicit ThetaSequence(Kind k) : kind_(k) {}

  Kind kind_;
  std::vector<double> params_;
  Distance cutoff_ = 0;
  double gamma_ = 0.0;
};

/// E|e| for a standard normal shock.
inline constexpr double kStdNormalAbsMean = 0.79788456080286535588;  // sqrt(2/pi)

}  // namespace nethac

#endif  // NETHAC_THETA_HPP
