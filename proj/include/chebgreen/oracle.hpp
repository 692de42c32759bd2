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

// Slow reference implementations: exact monomial-basis integration, the
// direct DCT-I sum, general barycentric weights and a dense Green matrix.
// They back the small-degree fallbacks and the verification checks.

#include <span>
#include <vector>

#include "chebgreen/cheb_core.hpp"
#include "chebgreen/green_operator.hpp"

namespace chebgreen::oracle {

inline constexpr int kMaxBarycentricPoints = 40;
inline constexpr int kMaxMonomialDegree = 12;
inline constexpr int kMaxGreenDegree = 10;

/// lambda_j = 1 / prod_{k != j} (x_j - x_k).
std::vector<double> barycentric_weights_general(std::span<const double> points);

/// Monomial coefficients (ascending powers) of the Lagrange basis polynomial
/// l_i on the given grid.
std::vector<double> lagrange_monomial_coeffs(int i, const ChebGrid& grid);

/// Exact integral over [a, b] of the polynomial with ascending monomial
/// coefficients `coeffs`.
double integrate_monomial(std::span<const double> coeffs, double a, double b);

/// Green matrix with entries split at x_k and integrated in the monomial
/// basis.
GreenMatrix green_matrix_dense_oracle(int n);

/// Direct O(n^2) evaluation of the orthonormal DCT-I.
std::vector<double> dct1_naive(std::span<const double> v);

}  // namespace chebgreen::oracle
