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

#pragma once

// Text serialization used by the command-line tool. CSV is row-major, one
// row per line, no header, LF endings, 17 significant digits so that every
// double survives a write/read round trip bit for bit.

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace chebgreen::io {

struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;  // row-major

  double operator()(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

std::string format_double(double v);
double parse_double(std::string_view text);

/// Reverses row and column order (descending <-> ascending nodes).
DenseMatrix reversed(const DenseMatrix& m);

void write_csv(std::ostream& os, const DenseMatrix& m);
DenseMatrix read_csv(std::istream& is);

/// One value per line.
void write_column(std::ostream& os, const std::vector<double>& v);
std::vector<double> read_column(std::istream& is);

/// {"degree": n, "ordering": "...", "entries": [[...], ...]}
void write_matrix_json(std::ostream& os, const DenseMatrix& m, int degree,
                       std::string_view ordering);

}  // namespace chebgreen::io
