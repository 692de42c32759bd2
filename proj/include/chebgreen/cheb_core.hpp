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

// Chebyshev-Gauss-Lobatto grids, the orthonormal DCT-I and the transforms
// between node values and Chebyshev coefficients.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace chebgreen {

/// Descending CGL points cos(j*pi/n), j = 0..n, with exact antisymmetry.
std::vector<double> cgl_points(int n);

/// Closed-form barycentric weights (-1)^j 2^(n-1)/n, endpoints halved.
/// Values overflow for n > ~1025; everything downstream uses ratios or
/// the cancelled form in node_poly_primitive.
std::vector<double> barycentric_weights_cgl(int n);

/// A degree-n Chebyshev-Gauss-Lobatto grid. Immutable.
class ChebGrid {
public:
  explicit ChebGrid(int degree);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::span<const double> points() const noexcept { return points_; }
  std::span<const double> bary_weights() const noexcept { return weights_; }
  double operator[](std::size_t j) const noexcept { return points_[j]; }

private:
  int degree_;
  std::vector<double> points_;
  std::vector<double> weights_;
};

/// Values of a polynomial at the n+1 nodes of a degree-n CGL grid.
class NodeVector {
public:
  NodeVector() = default;
  explicit NodeVector(std::vector<double> values);

  int degree() const noexcept { return static_cast<int>(values_.size()) - 1; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  double operator[](std::size_t j) const noexcept { return values_[j]; }
  double& operator[](std::size_t j) noexcept { return values_[j]; }
  std::vector<double> release() && { return std::move(values_); }

private:
  std::vector<double> values_;
};

/// Chebyshev coefficients; entry j multiplies T_j.
class CoeffVector {
public:
  CoeffVector() = default;
  explicit CoeffVector(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  std::span<double> values() noexcept { return values_; }
  double operator[](std::size_t j) const noexcept { return values_[j]; }
  double& operator[](std::size_t j) noexcept { return values_[j]; }

private:
  std::vector<double> values_;
};

/// Orthonormal, self-inverse DCT-I
///   out[s] = sqrt(2/(n-1)) (v[0]/2 + sum_{r=1}^{n-2} v[r] cos(pi r s/(n-1))
///            + (-1)^s v[n-1]/2).
/// Computed through a real FFT of the length-2(n-1) even extension; the
/// direct sum is used for n < 4. Safe to call concurrently.
std::vector<double> dct1(std::span<const double> v);

CoeffVector node_to_coeffs(const NodeVector& u);
NodeVector coeffs_to_nodes(const CoeffVector& coeffs);

/// T_k at the nodes of the degree-m grid.
std::vector<double> eval_chebyshev_at_cgl(int k, int m);

}  // namespace chebgreen
