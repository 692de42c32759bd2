// Copyright (c) 2026 The chebgreen authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "matrix_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace chebgreen::io {

std::string format_double(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("not a number: '" + std::string(text) + "'");
  }
  return v;
}

DenseMatrix reversed(const DenseMatrix& m) {
  DenseMatrix out{m.rows, m.cols, std::vector<double>(m.values.size())};
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      out.values[r * m.cols + c] = m(m.rows - 1 - r, m.cols - 1 - c);
    }
  }
  return out;
}

void write_csv(std::ostream& os, const DenseMatrix& m) {
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c) os << ',';
      os << format_double(m(r, c));
    }
    os << '\n';
  }
}

DenseMatrix read_csv(std::istream& is) {
  DenseMatrix m;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line == "\r") continue;
    std::size_t count = 0;
    std::string_view rest(line);
    while (true) {
      const auto comma = rest.find(',');
      m.values.push_back(parse_double(rest.substr(0, comma)));
      ++count;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (m.rows == 0) {
      m.cols = count;
    } else if (count != m.cols) {
      throw std::invalid_argument("csv: row " + std::to_string(m.rows + 1) + " has " +
                                  std::to_string(count) + " entries, expected " +
                                  std::to_string(m.cols));
    }
    ++m.rows;
  }
  return m;
}

void write_column(std::ostream& os, const std::vector<double>& v) {
  for (double x : v) os << format_double(x) << '\n';
}

std::vector<double> read_column(std::istream& is) {
  std::vector<double> v;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    v.push_back(parse_double(line));
  }
  return v;
}

void write_matrix_json(std::ostream& os, const DenseMatrix& m, int degree,
                       std::string_view ordering) {
  nlohmann::json entries = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols; ++c) row.push_back(m(r, c));
    entries.push_back(std::move(row));
  }
  const nlohmann::json doc = {
      {"degree", degree}, {"ordering", std::string(ordering)}, {"entries", std::move(entries)}};
  os << doc.dump() << '\n';
}

}  // namespace chebgreen::io
