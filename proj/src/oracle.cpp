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

#include "chebgreen/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chebgreen::oracle {

std::vector<double> barycentric_weights_general(std::span<const double> points) {
  if (points.size() > static_cast<std::size_t>(kMaxBarycentricPoints)) {
    throw std::invalid_argument("barycentric_weights_general: at most " +
                                std::to_string(kMaxBarycentricPoints) + " points");
  }
  std::vector<double> w(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    double prod = 1.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
      if (k == j) continue;
      const double diff = points[j] - points[k];
      if (diff == 0.0) throw std::invalid_argument("barycentric_weights_general: duplicate points");
      prod *= diff;
    }
    w[j] = 1.0 / prod;
  }
  return w;
}

std::vector<double> lagrange_monomial_coeffs(int i, const ChebGrid& grid) {
  const int n = grid.degree();
  if (n > kMaxMonomialDegree) {
    throw std::invalid_argument("lagrange_monomial_coeffs: degree above " +
                                std::to_string(kMaxMonomialDegree));
  }
  if (i < 0 || i > n) throw std::out_of_range("lagrange_monomial_coeffs: index out of range");

  // prod_{k != i} (x - x_k) / (x_i - x_k), expanded one factor at a time
  std::vector<double> c{1.0};
  for (int k = 0; k <= n; ++k) {
    if (k == i) continue;
    const double denom = grid[i] - grid[k];
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t p = 0; p < c.size(); ++p) {
      next[p + 1] += c[p] / denom;
      next[p] -= c[p] * grid[k] / denom;
    }
    c = std::move(next);
  }
  return c;
}

double integrate_monomial(std::span<const double> coeffs, double a, double b) {
  // Horner on the primitive sum c_p x^{p+1} / (p+1)
  double fa = 0.0;
  double fb = 0.0;
  for (std::size_t p = coeffs.size(); p-- > 0;) {
    const double c = coeffs[p] / static_cast<double>(p + 1);
    fa = fa * a + c;
    fb = fb * b + c;
  }
  return fb * b - fa * a;
}

GreenMatrix green_matrix_dense_oracle(int n) {
  if (n < 1 || n > kMaxGreenDegree) {
    throw std::invalid_argument("green_matrix_dense_oracle: degree must be in [1, " +
                                std::to_string(kMaxGreenDegree) + "]");
  }
  const ChebGrid grid(n);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    const std::vector<double> l = lagrange_monomial_coeffs(i, grid);
    // (xi + 1) l_i and (xi - 1) l_i
    std::vector<double> plus(l.size() + 1, 0.0);
    std::vector<double> minus(l.size() + 1, 0.0);
    for (std::size_t p = 0; p < l.size(); ++p) {
      plus[p + 1] += l[p];
      plus[p] += l[p];
      minus[p + 1] += l[p];
      minus[p] -= l[p];
    }
    for (int k = 1; k < n; ++k) {
      const double xk = grid[k];
      g(k, i) = 0.5 * (xk - 1.0) * integrate_monomial(plus, -1.0, xk) +
                0.5 * (xk + 1.0) * integrate_monomial(minus, xk, 1.0);
    }
  }
  return GreenMatrix(n, std::move(g));
}

std::vector<double> dct1_naive(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n < 2) throw std::invalid_argument("dct1_naive: length must be >= 2");
  const double scale = std::sqrt(2.0 / static_cast<double>(n - 1));
  std::vector<double> out(n);
  for (std::size_t s = 0; s < n; ++s) {
    double acc = 0.5 * v[0] + ((s % 2 == 0) ? 0.5 : -0.5) * v[n - 1];
    for (std::size_t r = 1; r + 1 < n; ++r) {
      const std::size_t m = (r * s) % (2 * (n - 1));
      acc += v[r] * std::cos(std::numbers::pi * static_cast<double>(m) /
                             static_cast<double>(n - 1));
    }
    out[s] = scale * acc;
  }
  return out;
}

}  // namespace chebgreen::oracle
