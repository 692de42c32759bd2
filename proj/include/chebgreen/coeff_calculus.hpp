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

#include <span>
#include <vector>

#include "chebgreen/cheb_core.hpp"

namespace chebgreen {

/// Node values of a primitive anchored at either end of [-1, 1]:
///   up[k]   = integral from -1 to x_k
///   down[k] = integral from x_k to 1
/// up[N] and down[0] are exactly zero.
struct PrimitivePair {
  NodeVector up;
  NodeVector down;
};

/// Appends `m` zero coefficients.
CoeffVector extend(const CoeffVector& coeffs, int m);

/// Chebyshev antiderivative (up to a constant), same length as the input:
///   out[0] = c[1]/4, out[1] = c[0] - c[2]/2,
///   out[j] = (c[j-1] - c[j+1]) / (2j) for j >= 2.
/// The last input coefficient must be exactly zero so the raised degree
/// still fits; anything else throws std::invalid_argument.
CoeffVector integrate_coeffs(const CoeffVector& coeffs);

/// Keeps the even-indexed entries of a length-(2N+1) vector. Values on the
/// degree-2N grid at even indices are values on the degree-N grid.
std::vector<double> reduce_fine_to_coarse(std::span<const double> fine);

/// Integrals of the degree-n Lagrange basis polynomial l_i from -1 to each
/// node and from each node to 1.
PrimitivePair lagrange_integrals(int i, int n);

/// Node values of Q(x) = T_{n+2}/(n+2) - 2 T_n/n + T_{n-2}/(n-2), a
/// primitive of 2^{n+1} times the node polynomial, for n >= 3.
NodeVector node_poly_base(int n);

/// The factor lambda_i / 2^{n+1} multiplying Q, with the powers of two
/// cancelled: (-1)^i / (4n), halved for i = 0 and i = n.
double node_poly_scale(int i, int n);

/// P^up and P^down for the primitive of lambda_i times the node polynomial.
/// Requires n >= 3.
PrimitivePair node_poly_primitive(int i, int n);

}  // namespace chebgreen
