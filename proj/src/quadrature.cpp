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

#include "chebgreen/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "chebgreen/spectral_operators.hpp"

namespace chebgreen {

namespace {

void require_degree(int n, int min, const char* what) {
  if (n < min) {
    throw std::invalid_argument(std::string(what) + ": degree must be >= " +
                                std::to_string(min) + ", got " + std::to_string(n));
  }
}

double sup_norm(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double max_pairwise_deviation(int n, const std::vector<NodeVector>& basis) {
  const GramMatrix s = consistent_gram_matrix(n);
  const Eigen::MatrixXd d2 = diff2_matrix(n).entries;
  std::vector<NodeVector> second;
  second.reserve(basis.size());
  for (const NodeVector& p : basis) {
    const Eigen::Map<const Eigen::VectorXd> v(p.values().data(), p.size());
    std::vector<double> out(p.size());
    Eigen::Map<Eigen::VectorXd>(out.data(), out.size()) = d2 * v;
    second.emplace_back(std::move(out));
  }
  double worst = 0.0;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const double lhs = consistent_inner_product(second[a], basis[b], s);
      const double rhs = consistent_inner_product(basis[a], second[b], s);
      const double scale = sup_norm(basis[a].values()) * sup_norm(basis[b].values());
      worst = std::max(worst, std::abs(lhs - rhs) / scale);
    }
  }
  return worst;
}

}  // namespace

QuadratureWeights cc_weights(int m) {
  require_degree(m, 1, "cc_weights");
  std::vector<double> moments(m + 1, 0.0);
  for (int j = 0; j <= m; j += 2) moments[j] = 2.0 / (1.0 - static_cast<double>(j) * j);
  std::vector<double> w = dct1(moments);
  const double scale = std::sqrt(2.0 / m);
  for (double& x : w) x *= scale;
  w.front() *= 0.5;
  w.back() *= 0.5;
  // the rule is exactly symmetric; remove round-off asymmetry
  for (int j = 0; 2 * j < m; ++j) w[j] = w[m - j] = 0.5 * (w[j] + w[m - j]);
  return {m, std::move(w)};
}

GramMatrix consistent_gram_matrix(int n) {
  require_degree(n, 1, "consistent_gram_matrix");
  const Eigen::MatrixXd r = reinterp_matrix(n, 2 * n).entries;
  const QuadratureWeights w = cc_weights(2 * n);
  const Eigen::Map<const Eigen::VectorXd> wv(w.weights.data(), w.weights.size());
  Eigen::MatrixXd s = r.transpose() * wv.asDiagonal() * r;
  s = 0.5 * (s + s.transpose()).eval();
  return {n, std::move(s)};
}

double consistent_inner_product(const NodeVector& p, const NodeVector& q, const GramMatrix& s) {
  const Eigen::Index n = s.entries.rows();
  if (static_cast<Eigen::Index>(p.size()) != n || static_cast<Eigen::Index>(q.size()) != n) {
    throw std::invalid_argument("consistent_inner_product: vectors must have degree " +
                                std::to_string(s.degree));
  }
  double acc = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    acc += s.entries(i, i) * (p[i] * q[i]);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      acc += s.entries(i, j) * (p[j] * q[i] + p[i] * q[j]);
    }
  }
  return acc;
}

double verify_d2_symmetry(int n) {
  require_degree(n, 3, "verify_d2_symmetry");
  const std::vector<double> x = cgl_points(n);
  std::vector<NodeVector> basis;
  for (int m = 0; m <= n - 2; ++m) {
    std::vector<double> t = eval_chebyshev_at_cgl(m, n);
    for (int k = 0; k <= n; ++k) t[k] *= (1.0 - x[k] * x[k]);
    t.front() = 0.0;
    t.back() = 0.0;
    basis.emplace_back(std::move(t));
  }
  return max_pairwise_deviation(n, basis);
}

double d2_symmetry_full_space(int n) {
  require_degree(n, 3, "d2_symmetry_full_space");
  std::vector<NodeVector> basis;
  for (int m = 0; m <= n; ++m) basis.emplace_back(eval_chebyshev_at_cgl(m, n));
  return max_pairwise_deviation(n, basis);
}

}  // namespace chebgreen
