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

#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "chebgreen/cheb_core.hpp"

namespace chebgreen {

enum class OperatorRole { D, D2, D2Stripped, R, E, P, D2BC, GBC, W, S };

std::string_view to_string(OperatorRole role);

/// A dense operator together with what it represents.
struct OperatorMatrix {
  OperatorRole role;
  Eigen::MatrixXd entries;

  Eigen::Index rows() const noexcept { return entries.rows(); }
  Eigen::Index cols() const noexcept { return entries.cols(); }
};

/// Thrown when a factorization turns out to be numerically singular.
class SingularMatrixError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// First-derivative collocation matrix; diagonal is the negative sum of the
/// off-diagonal row entries.
OperatorMatrix diff_matrix(int n);

/// D * D.
OperatorMatrix diff2_matrix(int n);

/// Interior (N-1) x (N-1) block of a square (N+1) x (N+1) operator.
OperatorMatrix strip(const OperatorMatrix& d2);

/// Solves the stripped collocation system D2~ y~ = f~ by LU; boundary values
/// are zero.
NodeVector solve_stripped(const NodeVector& f);

/// Evaluates the degree-n_from interpolant on the degree-n_to grid.
OperatorMatrix reinterp_matrix(int n_from, int n_to);

/// [0 | I | 0], drops the boundary values.
OperatorMatrix projection_matrix(int n);

/// Extends interior values to the full grid by evaluating their degree-(N-2)
/// interpolant at x = 1 and x = -1.
OperatorMatrix extension_matrix(int n);

/// [e_0; P D2; e_N]: second derivative in the interior, boundary values kept.
OperatorMatrix diff2_bc_matrix(int n);

/// [(1+x)/2 | G E | (1-x)/2], the inverse of diff2_bc_matrix.
OperatorMatrix green_bc_matrix(int n);

/// Barycentric weights of an arbitrary point set, scaled so that the largest
/// magnitude is one. Unlike the plain product formula this does not
/// overflow for large point counts.
std::vector<double> scaled_barycentric_weights(std::span<const double> points);

/// max |(G D2)~ - I|, strip applied after the product. n >= 3.
double verify_left_inverse(int n);

/// max |R_{N->N-2} D2 G R_{N-2->N} - I|. n >= 4.
double verify_right_inverse(int n);

/// Larger of max |D2_BC G_BC - I| and max |G_BC D2_BC - I|. n >= 2.
double verify_bc_inverse(int n);

}  // namespace chebgreen
