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

#include <Eigen/Dense>

#include <string_view>

#include "chebgreen/cheb_core.hpp"

namespace chebgreen {

/// Dense discrete solution operator for y'' = f, y(-1) = y(1) = 0, on the
/// degree-N CGL grid: y = G f. Entry (k, i) is the integral of
/// G(x_k, xi) l_i(xi) over [-1, 1]. Rows 0 and N are exactly zero and the
/// matrix is exactly centrosymmetric.
class GreenMatrix {
public:
  GreenMatrix(int degree, Eigen::MatrixXd entries);

  int degree() const noexcept { return degree_; }
  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  double operator()(int k, int i) const { return entries_(k, i); }

  NodeVector apply(const NodeVector& f) const;

private:
  int degree_;
  Eigen::MatrixXd entries_;
};

/// Continuous Green function of d^2/dx^2 with zero Dirichlet conditions.
double green_function_eval(double x, double xi);

/// Assembles the Green matrix. Degrees 1 and 2 use the dense oracle; larger
/// degrees build half of the columns from Lagrange-basis primitives and
/// mirror the rest. Columns are computed on `threads` workers (0 picks the
/// hardware concurrency); the result does not depend on the thread count.
GreenMatrix green_matrix(int n, unsigned threads = 0);

/// G f without forming G: two antiderivatives in coefficient space on the
/// degree-2N grid, then the linear function through the endpoint values is
/// subtracted. O(N log N).
NodeVector apply_green_matrix_free(const NodeVector& f);

enum class SolveMethod { DenseGreen, MatrixFree, LinearSystem };

SolveMethod parse_solve_method(std::string_view name);
std::string_view to_string(SolveMethod method);

NodeVector solve_bvp(const NodeVector& f, SolveMethod method);

}  // namespace chebgreen
