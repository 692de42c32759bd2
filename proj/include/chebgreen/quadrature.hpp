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

#include <vector>

#include "chebgreen/cheb_core.hpp"

namespace chebgreen {

/// Clenshaw-Curtis weights w_i = integral of l_i over [-1, 1] on the
/// degree-M CGL grid.
struct QuadratureWeights {
  int degree;
  std::vector<double> weights;
};

/// S = R^T W R with R the degree-N -> degree-2N reinterpolation and W the
/// degree-2N Clenshaw-Curtis weights. q^T S p is the exact integral of p q
/// for polynomials of degree <= N. Stored exactly symmetric.
struct GramMatrix {
  int degree;
  Eigen::MatrixXd entries;
};

/// One DCT-I of the Chebyshev moments integral(T_j) = 2/(1-j^2), even j:
/// the transpose of the node-to-coefficient map applied to the moments.
QuadratureWeights cc_weights(int m);

GramMatrix consistent_gram_matrix(int n);

/// q^T S p, summed so that the result is bitwise symmetric in p and q.
double consistent_inner_product(const NodeVector& p, const NodeVector& q, const GramMatrix& s);

/// Max over the zero-boundary basis (1 - x^2) T_m, m <= N-2, of
/// |<S D2 p, q> - <S p, D2 q>| / (|p|_inf |q|_inf). n >= 3.
double verify_d2_symmetry(int n);

/// Same measure over the full basis T_0..T_N, where the identity does not
/// hold; reported for reference only.
double d2_symmetry_full_space(int n);

}  // namespace chebgreen
