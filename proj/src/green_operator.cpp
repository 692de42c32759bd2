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

#include "chebgreen/green_operator.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "chebgreen/coeff_calculus.hpp"
#include "chebgreen/oracle.hpp"
#include "chebgreen/spectral_operators.hpp"

namespace chebgreen {

GreenMatrix::GreenMatrix(int degree, Eigen::MatrixXd entries)
    : degree_(degree), entries_(std::move(entries)) {
  if (entries_.rows() != degree + 1 || entries_.cols() != degree + 1) {
    throw std::invalid_argument("GreenMatrix: entries must be (degree+1) x (degree+1)");
  }
}

NodeVector GreenMatrix::apply(const NodeVector& f) const {
  if (f.degree() != degree_) {
    throw std::invalid_argument("GreenMatrix::apply: vector of degree " +
                                std::to_string(f.degree()) + " on a degree-" +
                                std::to_string(degree_) + " grid");
  }
  const Eigen::Map<const Eigen::VectorXd> in(f.values().data(), f.size());
  std::vector<double> out(f.size());
  Eigen::Map<Eigen::VectorXd>(out.data(), out.size()).noalias() = entries_ * in;
  return NodeVector(std::move(out));
}

double green_function_eval(double x, double xi) {
  if (!(x >= -1.0 && x <= 1.0) || !(xi >= -1.0 && xi <= 1.0)) {
    throw std::domain_error("green_function_eval: arguments must lie in [-1, 1]");
  }
  if (x <= xi) return 0.5 * (x + 1.0) * (xi - 1.0);
  return 0.5 * (x - 1.0) * (xi + 1.0);
}

namespace {

void assemble_column(int i, std::span<const double> x, std::span<const double> q,
                     Eigen::MatrixXd& g) {
  const int n = static_cast<int>(x.size()) - 1;
  const PrimitivePair l = lagrange_integrals(i, n);
  const double s = node_poly_scale(i, n);
  const double xi = x[i];
  for (int k = 1; k < n; ++k) {
    const double p_down = s * (q[0] - q[k]);
    const double p_up = s * (q[k] - q[n]);
    g(k, i) = 0.5 * (x[k] + 1.0) * (p_down + (xi - 1.0) * l.down[k]) +
              0.5 * (x[k] - 1.0) * (p_up + (xi + 1.0) * l.up[k]);
  }
}

}  // namespace

GreenMatrix green_matrix(int n, unsigned threads) {
  if (n < 1) throw std::invalid_argument("green_matrix: degree must be >= 1");
  if (n < 3) return oracle::green_matrix_dense_oracle(n);

  const std::vector<double> x = cgl_points(n);
  const NodeVector q = node_poly_base(n);
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n + 1, n + 1);

  const int half = n / 2;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(half + 1));

  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i <= half; i = next++) assemble_column(i, x, q.values(), g);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Mirror by centrosymmetry. For even n the middle column is its own
  // mirror image, so its lower half is copied from the upper half.
  for (int i = 0; i <= half; ++i) {
    for (int k = 0; k <= n; ++k) {
      if (n - i == i && k > half) {
        g(k, i) = g(n - k, i);
      } else if (n - i != i) {
        g(n - k, n - i) = g(k, i);
      }
    }
  }
  g.row(0).setZero();
  g.row(n).setZero();
  return GreenMatrix(n, std::move(g));
}

NodeVector apply_green_matrix_free(const NodeVector& f) {
  const int n = f.degree();
  if (n < 2) throw std::invalid_argument("apply_green_matrix_free: degree must be >= 2");

  // the double primitive has degree n+2 <= 2n
  const CoeffVector c = integrate_coeffs(integrate_coeffs(extend(node_to_coeffs(f), n)));
  std::vector<double> y = reduce_fine_to_coarse(coeffs_to_nodes(c).values());

  const std::vector<double> x = cgl_points(n);
  const double right = y[0];
  const double left = y[n];
  for (int k = 1; k < n; ++k) {
    y[k] -= 0.5 * (right * (1.0 + x[k]) + left * (1.0 - x[k]));
  }
  y[0] = 0.0;
  y[n] = 0.0;
  return NodeVector(std::move(y));
}

SolveMethod parse_solve_method(std::string_view name) {
  if (name == "dense-green") return SolveMethod::DenseGreen;
  if (name == "matrix-free") return SolveMethod::MatrixFree;
  if (name == "linear-system") return SolveMethod::LinearSystem;
  throw std::invalid_argument("unknown solve method '" + std::string(name) + "'");
}

std::string_view to_string(SolveMethod method) {
  switch (method) {
    case SolveMethod::DenseGreen: return "dense-green";
    case SolveMethod::MatrixFree: return "matrix-free";
    case SolveMethod::LinearSystem: return "linear-system";
  }
  return "unknown";
}

NodeVector solve_bvp(const NodeVector& f, SolveMethod method) {
  switch (method) {
    case SolveMethod::DenseGreen: return green_matrix(f.degree()).apply(f);
    case SolveMethod::MatrixFree: return apply_green_matrix_free(f);
    case SolveMethod::LinearSystem: return solve_stripped(f);
  }
  throw std::invalid_argument("solve_bvp: unknown method");
}

}  // namespace chebgreen
