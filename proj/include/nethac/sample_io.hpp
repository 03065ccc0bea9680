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

#ifndef NETHAC_SAMPLE_IO_HPP
#define NETHAC_SAMPLE_IO_HPP

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nethac/edge_list.hpp"
#include "nethac/error.hpp"
#include "nethac/hac.hpp"

namespace nethac {

// Format: header y1,...,yv, then one row of v numbers per node, in node
// order. Blank lines and '#' comments are ignored.

namespace detail {

inline std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  while (true) {
    const auto c = s.find(',');
    out.push_back(trim(s.substr(0, c)));
    if (c == std::string_view::npos) break;
    s.remove_prefix(c + 1);
  }
  return out;
}

}  // namespace detail

inline Eigen::MatrixXd read_sample_csv(std::istream& in) {
  std::optional<std::size_t> v;
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view s = line;
    if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = detail::trim(s);
    if (s.empty()) continue;
    auto cols = detail::split_commas(s);
    if (!v) {
      for (std::size_t k = 0; k < cols.size(); ++k) {
        if (cols[k] != "y" + std::to_string(k + 1)) {
          throw ParseError("line " + std::to_string(line_no) + ": expected header y1,...,yv");
        }
      }
      v = cols.size();
      continue;
    }
    if (cols.size() != *v) {
      throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(*v) + " columns");
    }
    for (auto c : cols) values.push_back(detail::parse_number<double>(c, line_no));
  }
  if (!v) throw ParseError("sample csv: missing header y1,...,yv");
  const std::size_t n = values.size() / *v;
  Eigen::MatrixXd y(n, *v);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < *v; ++k) y(i, k) = values[i * *v + k];
  return y;
}

inline Eigen::MatrixXd read_sample_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open sample '" + path + "'");
  return read_sample_csv(in);
}

/// Round-trip exact: 17 significant digits.
inline void write_sample_csv(std::ostream& out, const Eigen::MatrixXd& y) {
  for (Eigen::Index k = 0; k < y.cols(); ++k) out << (k ? ",y" : "y") << k + 1;
  out << '\n';
  for (Eigen::Index i = 0; i < y.rows(); ++i) {
    for (Eigen::Index k = 0; k < y.cols(); ++k) fmt::print(out, "{}{:.17g}", k ? "," : "", y(i, k));
    out << '\n';
  }
}

inline void write_sample_csv(const std::string& path, const Eigen::MatrixXd& y) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write sample '" + path + "'");
  write_sample_csv(out, y);
}

}  // namespace nethac

#endif  // NETHAC_SAMPLE_IO_HPP
