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

#include "chebgreen/coeff_calculus.hpp"

#include <stdexcept>
#include <string>

namespace chebgreen {

namespace {

void check_index(int i, int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": degree must be >= 1");
  if (i < 0 || i > n) {
    throw std::out_of_range(std::string(what) + ": basis index " + std::to_string(i) +
                            " outside [0, " + std::to_string(n) + "]");
  }
}

// Values on the degree-N grid of the polynomial whose fine-grid Chebyshev
// coefficients are given (length 2N+1).
std::vector<double> coarse_values(const CoeffVector& fine_coeffs) {
  return reduce_fine_to_coarse(coeffs_to_nodes(fine_coeffs).values());
}

PrimitivePair anchor(const std::vector<double>& primitive) {
  const std::size_t n = primitive.size() - 1;
  std::vector<double> up(n + 1);
  std::vector<double> down(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    up[k] = primitive[k] - primitive[n];
    down[k] = primitive[0] - primitive[k];
  }
  return {NodeVector(std::move(up)), NodeVector(std::move(down))};
}

}  // namespace

CoeffVector extend(const CoeffVector& coeffs, int m) {
  if (m < 0) throw std::invalid_argument("extend: negative padding");
  std::vector<double> out(coeffs.values().begin(), coeffs.values().end());
  out.resize(out.size() + static_cast<std::size_t>(m), 0.0);
  return CoeffVector(std::move(out));
}

CoeffVector integrate_coeffs(const CoeffVector& coeffs) {
  const std::size_t len = coeffs.size();
  if (len < 3) throw std::invalid_argument("integrate_coeffs: length must be >= 3");
  if (coeffs[len - 1] != 0.0) {
    throw std::invalid_argument(
        "integrate_coeffs: last coefficient must be zero or the raised degree is truncated; "
        "extend the input first");
  }
  const auto at = [&](std::size_t j) { return j < len ? coeffs[j] : 0.0; };
  std::vector<double> out(len, 0.0);
  out[0] = 0.25 * at(1);
  out[1] = at(0) - 0.5 * at(2);
  for (std::size_t j = 2; j < len; ++j) {
    out[j] = (at(j - 1) - at(j + 1)) / (2.0 * static_cast<double>(j));
  }
  return CoeffVector(std::move(out));
}

std::vector<double> reduce_fine_to_coarse(std::span<const double> fine) {
  if (fine.size() % 2 == 0) {
    throw std::invalid_argument("reduce_fine_to_coarse: input length must be odd, got " +
                                std::to_string(fine.size()));
  }
  std::vector<double> coarse((fine.size() + 1) / 2);
  for (std::size_t m = 0; m < coarse.size(); ++m) coarse[m] = fine[2 * m];
  return coarse;
}

PrimitivePair lagrange_integrals(int i, int n) {
  check_index(i, n, "lagrange_integrals");
  std::vector<double> unit(n + 1, 0.0);
  unit[i] = 1.0;
  const CoeffVector coeffs = node_to_coeffs(NodeVector(std::move(unit)));
  return anchor(coarse_values(integrate_coeffs(extend(coeffs, n))));
}

NodeVector node_poly_base(int n) {
  if (n < 3) throw std::invalid_argument("node_poly_base: degree must be >= 3");
  std::vector<double> fine(2 * n + 1, 0.0);
  fine[n - 2] = 1.0 / (n - 2);
  fine[n] = -2.0 / n;
  fine[n + 2] = 1.0 / (n + 2);
  return NodeVector(coarse_values(CoeffVector(std::move(fine))));
}

double node_poly_scale(int i, int n) {
  check_index(i, n, "node_poly_scale");
  double s = ((i % 2 == 0) ? 1.0 : -1.0) / (4.0 * n);
  if (i == 0 || i == n) s *= 0.5;
  return s;
}

PrimitivePair node_poly_primitive(int i, int n) {
  if (n < 3) throw std::invalid_argument("node_poly_primitive: degree must be >= 3");
  check_index(i, n, "node_poly_primitive");
  const double scale = node_poly_scale(i, n);
  std::vector<double> values = std::move(node_poly_base(n)).release();
  for (double& v : values) v *= scale;
  return anchor(values);
}

}  // namespace chebgreen
