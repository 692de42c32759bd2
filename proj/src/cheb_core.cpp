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

#include "chebgreen/cheb_core.hpp"

#include "chebgreen/oracle.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace chebgreen {

namespace {

// fftw planning is not thread-safe, execution with the new-array interface
// is. Plans live for the process lifetime.
class R2CPlanCache {
public:
  ~R2CPlanCache() {
    for (auto& [len, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int len) {
    std::lock_guard lock(mutex_);
    if (auto it = plans_.find(len); it != plans_.end()) return it->second;
    double* in = fftw_alloc_real(len);
    fftw_complex* out = fftw_alloc_complex(len / 2 + 1);
    fftw_plan plan = fftw_plan_dft_r2c_1d(len, in, out, FFTW_ESTIMATE);
    fftw_free(in);
    fftw_free(out);
    if (plan == nullptr) throw std::runtime_error("fftw: unable to create plan");
    plans_.emplace(len, plan);
    return plan;
  }

private:
  std::mutex mutex_;
  std::map<int, fftw_plan> plans_;
};

R2CPlanCache& plan_cache() {
  static R2CPlanCache cache;
  return cache;
}

struct FftwDeleter {
  void operator()(void* p) const noexcept { fftw_free(p); }
};

std::vector<double> dct1_fft(std::span<const double> v) {
  const int n = static_cast<int>(v.size());
  const int len = 2 * (n - 1);
  fftw_plan plan = plan_cache().get(len);

  std::unique_ptr<double, FftwDeleter> in(fftw_alloc_real(len));
  std::unique_ptr<fftw_complex, FftwDeleter> out(fftw_alloc_complex(len / 2 + 1));
  double* e = in.get();
  for (int r = 0; r < n; ++r) e[r] = v[r];
  for (int r = 1; r < n - 1; ++r) e[len - r] = v[r];

  fftw_execute_dft_r2c(plan, e, out.get());

  const double scale = 0.5 * std::sqrt(2.0 / static_cast<double>(n - 1));
  std::vector<double> result(n);
  for (int s = 0; s < n; ++s) result[s] = scale * out.get()[s][0];
  return result;
}

void require_degree(int n, int min, const char* what) {
  if (n < min) {
    throw std::invalid_argument(std::string(what) + ": degree must be >= " +
                                std::to_string(min) + ", got " + std::to_string(n));
  }
}

}  // namespace

std::vector<double> cgl_points(int n) {
  require_degree(n, 1, "cgl_points");
  std::vector<double> x(n + 1);
  for (int j = 0; 2 * j <= n; ++j) {
    x[j] = std::cos(std::numbers::pi * j / n);
    x[n - j] = -x[j];
  }
  if (n % 2 == 0) x[n / 2] = 0.0;
  return x;
}

std::vector<double> barycentric_weights_cgl(int n) {
  require_degree(n, 1, "barycentric_weights_cgl");
  const double mag = std::ldexp(1.0, n - 1) / n;
  std::vector<double> w(n + 1);
  for (int j = 0; j <= n; ++j) w[j] = (j % 2 == 0) ? mag : -mag;
  w[0] *= 0.5;
  w[n] *= 0.5;
  return w;
}

ChebGrid::ChebGrid(int degree)
    : degree_(degree), points_(cgl_points(degree)), weights_(barycentric_weights_cgl(degree)) {}

NodeVector::NodeVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < 2) {
    throw std::invalid_argument("NodeVector: need at least 2 node values (degree >= 1)");
  }
}

CoeffVector::CoeffVector(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("CoeffVector: empty coefficient vector");
}

std::vector<double> dct1(std::span<const double> v) {
  if (v.size() < 2) throw std::invalid_argument("dct1: length must be >= 2");
  if (v.size() < 4) return oracle::dct1_naive(v);
  return dct1_fft(v);
}

CoeffVector node_to_coeffs(const NodeVector& u) {
  const std::size_t n = u.size();
  if (n < 2) throw std::invalid_argument("node_to_coeffs: need at least 2 node values");
  const int degree = u.degree();
  const double scale = std::sqrt(2.0 / degree);
  std::vector<double> scaled(u.values().begin(), u.values().end());
  for (double& x : scaled) x *= scale;
  std::vector<double> c = dct1(scaled);
  c.front() *= 0.5;
  c.back() *= 0.5;
  return CoeffVector(std::move(c));
}

NodeVector coeffs_to_nodes(const CoeffVector& coeffs) {
  const std::size_t n = coeffs.size();
  if (n < 2) throw std::invalid_argument("coeffs_to_nodes: need at least 2 coefficients");
  const double scale = std::sqrt(static_cast<double>(n - 1) / 2.0);
  std::vector<double> scaled(coeffs.values().begin(), coeffs.values().end());
  for (double& x : scaled) x *= scale;
  scaled.front() *= 2.0;
  scaled.back() *= 2.0;
  return NodeVector(dct1(scaled));
}

std::vector<double> eval_chebyshev_at_cgl(int k, int m) {
  require_degree(m, 1, "eval_chebyshev_at_cgl");
  if (k < 0 || k > m) {
    throw std::out_of_range("eval_chebyshev_at_cgl: index " + std::to_string(k) +
                            " outside [0, " + std::to_string(m) + "]");
  }
  std::vector<double> unit(m + 1, 0.0);
  unit[k] = 1.0;
  return std::move(coeffs_to_nodes(CoeffVector(std::move(unit)))).release();
}

}  // namespace chebgreen
