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

#include "chebgreen/spectral_operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "chebgreen/green_operator.hpp"

namespace chebgreen {

namespace {

void require_degree(int n, int min, const char* what) {
  if (n < min) {
    throw std::invalid_argument(std::string(what) + ": degree must be >= " +
                                std::to_string(min) + ", got " + std::to_string(n));
  }
}

// CGL weights divided by 2^(n-1)/n; only ratios are ever needed.
double unit_cgl_weight(int j, int n) {
  double w = (j % 2 == 0) ? 1.0 : -1.0;
  return (j == 0 || j == n) ? 0.5 * w : w;
}

// Row of the barycentric interpolation formula at `t`, which must not
// coincide with any node.
void barycentric_row(double t, std::span<const double> nodes, std::span<const double> weights,
                     Eigen::Ref<Eigen::RowVectorXd, 0, Eigen::InnerStride<>> row) {
  double denom = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    row[j] = weights[j] / (t - nodes[j]);
    denom += row[j];
  }
  row /= denom;
}

double max_abs_minus_identity(const Eigen::MatrixXd& m) {
  return (m - Eigen::MatrixXd::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff();
}

}  // namespace

std::string_view to_string(OperatorRole role) {
  switch (role) {
    case OperatorRole::D: return "D";
    case OperatorRole::D2: return "D2";
    case OperatorRole::D2Stripped: return "D2-stripped";
    case OperatorRole::R: return "R";
    case OperatorRole::E: return "E";
    case OperatorRole::P: return "P";
    case OperatorRole::D2BC: return "D2-BC";
    case OperatorRole::GBC: return "G-BC";
    case OperatorRole::W: return "W";
    case OperatorRole::S: return "S";
  }
  return "unknown";
}

OperatorMatrix diff_matrix(int n) {
  require_degree(n, 1, "diff_matrix");
  Eigen::MatrixXd d(n + 1, n + 1);
  const double h = std::numbers::pi / (2.0 * n);
  for (int k = 0; k <= n; ++k) {
    double row_sum = 0.0;
    for (int j = 0; j <= n; ++j) {
      if (j == k) continue;
      // x_k - x_j without cancellation
      const double diff = -2.0 * std::sin((k + j) * h) * std::sin((k - j) * h);
      d(k, j) = (unit_cgl_weight(j, n) / unit_cgl_weight(k, n)) / diff;
      row_sum += d(k, j);
    }
    d(k, k) = -row_sum;
  }
  return {OperatorRole::D, std::move(d)};
}

OperatorMatrix diff2_matrix(int n) {
  require_degree(n, 2, "diff2_matrix");
  const Eigen::MatrixXd d = diff_matrix(n).entries;
  return {OperatorRole::D2, d * d};
}

OperatorMatrix strip(const OperatorMatrix& d2) {
  if (d2.rows() != d2.cols() || d2.rows() < 3) {
    throw std::invalid_argument("strip: need a square matrix of size at least 3");
  }
  const Eigen::Index m = d2.rows() - 2;
  return {OperatorRole::D2Stripped, d2.entries.block(1, 1, m, m)};
}

NodeVector solve_stripped(const NodeVector& f) {
  const int n = f.degree();
  require_degree(n, 2, "solve_stripped");
  const OperatorMatrix a = strip(diff2_matrix(n));
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(a.entries);
  const double rcond = lu.rcond();
  if (!(rcond > std::numeric_limits<double>::epsilon())) {
    throw SingularMatrixError("solve_stripped: stripped second-derivative matrix is singular "
                              "(rcond = " + std::to_string(rcond) + ")");
  }
  const Eigen::Map<const Eigen::VectorXd> rhs(f.values().data() + 1, n - 1);
  const Eigen::VectorXd interior = lu.solve(rhs);
  std::vector<double> y(n + 1, 0.0);
  for (int k = 1; k < n; ++k) y[k] = interior[k - 1];
  return NodeVector(std::move(y));
}

OperatorMatrix reinterp_matrix(int n_from, int n_to) {
  require_degree(n_from, 1, "reinterp_matrix");
  require_degree(n_to, 1, "reinterp_matrix");
  const std::vector<double> x = cgl_points(n_from);
  const std::vector<double> y = cgl_points(n_to);
  std::vector<double> w(n_from + 1);
  for (int j = 0; j <= n_from; ++j) w[j] = unit_cgl_weight(j, n_from);

  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(n_to + 1, n_from + 1);
  for (int m = 0; m <= n_to; ++m) {
    // y_m = x_j exactly when m/n_to = j/n_from
    const long long num = static_cast<long long>(m) * n_from;
    if (num % n_to == 0) {
      r(m, static_cast<Eigen::Index>(num / n_to)) = 1.0;
      continue;
    }
    barycentric_row(y[m], x, w, r.row(m));
  }
  return {OperatorRole::R, std::move(r)};
}

OperatorMatrix projection_matrix(int n) {
  require_degree(n, 2, "projection_matrix");
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n - 1, n + 1);
  p.block(0, 1, n - 1, n - 1).setIdentity();
  return {OperatorRole::P, std::move(p)};
}

std::vector<double> scaled_barycentric_weights(std::span<const double> points) {
  const std::size_t m = points.size();
  std::vector<double> log_mag(m, 0.0);
  std::vector<double> sign(m, 1.0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < m; ++k) {
      if (k == j) continue;
      const double diff = points[j] - points[k];
      if (diff == 0.0) throw std::invalid_argument("scaled_barycentric_weights: duplicate points");
      log_mag[j] -= std::log(std::abs(diff));
      if (diff < 0.0) sign[j] = -sign[j];
    }
  }
  const double top = *std::max_element(log_mag.begin(), log_mag.end());
  std::vector<double> w(m);
  for (std::size_t j = 0; j < m; ++j) w[j] = sign[j] * std::exp(log_mag[j] - top);
  return w;
}

OperatorMatrix extension_matrix(int n) {
  require_degree(n, 2, "extension_matrix");
  const std::vector<double> x = cgl_points(n);
  const std::span<const double> interior(x.data() + 1, n - 1);
  Eigen::MatrixXd e = Eigen::MatrixXd::Zero(n + 1, n - 1);
  e.block(1, 0, n - 1, n - 1).setIdentity();
  if (n == 2) {
    e.row(0).setOnes();
    e.row(2).setOnes();
  } else {
    const std::vector<double> w = scaled_barycentric_weights(interior);
    barycentric_row(1.0, interior, w, e.row(0));
    barycentric_row(-1.0, interior, w, e.row(n));
  }
  return {OperatorRole::E, std::move(e)};
}

OperatorMatrix diff2_bc_matrix(int n) {
  require_degree(n, 2, "diff2_bc_matrix");
  Eigen::MatrixXd m = diff2_matrix(n).entries;
  m.row(0).setZero();
  m.row(n).setZero();
  m(0, 0) = 1.0;
  m(n, n) = 1.0;
  return {OperatorRole::D2BC, std::move(m)};
}

OperatorMatrix green_bc_matrix(int n) {
  require_degree(n, 2, "green_bc_matrix");
  const std::vector<double> x = cgl_points(n);
  const GreenMatrix g = green_matrix(n);
  Eigen::MatrixXd m(n + 1, n + 1);
  m.block(0, 1, n + 1, n - 1) = g.entries() * extension_matrix(n).entries;
  for (int k = 0; k <= n; ++k) {
    m(k, 0) = 0.5 * (x[0] + x[k]);
    m(k, n) = -0.5 * (x[n] + x[k]);
  }
  return {OperatorRole::GBC, std::move(m)};
}

double verify_left_inverse(int n) {
  require_degree(n, 3, "verify_left_inverse");
  const Eigen::MatrixXd product = green_matrix(n).entries() * diff2_matrix(n).entries;
  return max_abs_minus_identity(product.block(1, 1, n - 1, n - 1));
}

double verify_right_inverse(int n) {
  require_degree(n, 4, "verify_right_inverse");
  const Eigen::MatrixXd product = reinterp_matrix(n, n - 2).entries *
                                  diff2_matrix(n).entries * green_matrix(n).entries() *
                                  reinterp_matrix(n - 2, n).entries;
  return max_abs_minus_identity(product);
}

double verify_bc_inverse(int n) {
  require_degree(n, 2, "verify_bc_inverse");
  const Eigen::MatrixXd d2bc = diff2_bc_matrix(n).entries;
  const Eigen::MatrixXd gbc = green_bc_matrix(n).entries;
  return std::max(max_abs_minus_identity(d2bc * gbc), max_abs_minus_identity(gbc * d2bc));
}

}  // namespace chebgreen
