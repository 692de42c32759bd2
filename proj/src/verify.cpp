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

#include "chebgreen/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "chebgreen/coeff_calculus.hpp"
#include "chebgreen/green_operator.hpp"
#include "chebgreen/oracle.hpp"
#include "chebgreen/quadrature.hpp"
#include "chebgreen/spectral_operators.hpp"

namespace chebgreen {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Identity checks built on D2 lose accuracy like its condition number, N^4.
// Observed deviations sit one to three orders of magnitude below this.
double conditioning_tolerance(int n) {
  const double n2 = static_cast<double>(n) * n;
  return std::max(1e-13, 2.0 * n2 * n2 * kEps);
}

double oracle_deviation(int n) {
  const Eigen::MatrixXd diff =
      green_matrix(n).entries() - oracle::green_matrix_dense_oracle(n).entries();
  return diff.cwiseAbs().maxCoeff();
}

double centrosymmetry_deviation(int n) {
  const GreenMatrix g = green_matrix(n);
  double worst = std::max(g.entries().row(0).cwiseAbs().maxCoeff(),
                          g.entries().row(n).cwiseAbs().maxCoeff());
  for (int k = 0; k <= n; ++k) {
    for (int i = 0; i <= n; ++i) worst = std::max(worst, std::abs(g(k, i) - g(n - k, n - i)));
  }
  return worst;
}

double cc_weights_deviation(int n) {
  const QuadratureWeights w = cc_weights(n);
  double sum = 0.0;
  double worst = 0.0;
  for (int i = 0; i <= n; ++i) {
    if (!(w.weights[i] > 0.0)) return std::numeric_limits<double>::infinity();
    sum += w.weights[i];
    worst = std::max(worst, std::abs(w.weights[i] - lagrange_integrals(i, n).up[0]));
  }
  return std::max(worst, std::abs(sum - 2.0));
}

}  // namespace

std::string_view to_string(Check check) {
  switch (check) {
    case Check::Oracle: return "oracle";
    case Check::LeftInverse: return "left-inverse";
    case Check::RightInverse: return "right-inverse";
    case Check::BcInverse: return "bc-inverse";
    case Check::Centrosymmetry: return "centrosymmetry";
    case Check::Symmetry: return "symmetry";
    case Check::CcWeights: return "cc-weights";
  }
  return "unknown";
}

std::optional<Check> parse_check(std::string_view name) {
  for (Check c : kAllChecks) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

DegreeRange check_degree_range(Check check) {
  switch (check) {
    case Check::Oracle: return {1, oracle::kMaxGreenDegree};
    case Check::LeftInverse: return {3, 0};
    case Check::RightInverse: return {4, 0};
    case Check::BcInverse: return {2, 0};
    case Check::Centrosymmetry: return {1, 0};
    case Check::Symmetry: return {3, 0};
    case Check::CcWeights: return {1, 0};
  }
  return {1, 0};
}

double check_tolerance(Check check, int n) {
  switch (check) {
    case Check::Oracle: return 1e-12;
    case Check::LeftInverse: return conditioning_tolerance(n);
    case Check::RightInverse: return conditioning_tolerance(n);
    case Check::BcInverse: return conditioning_tolerance(n);
    case Check::Centrosymmetry: return 0.0;
    case Check::Symmetry: return conditioning_tolerance(n);
    case Check::CcWeights: return 1e-13;
  }
  return 0.0;
}

CheckResult run_check(Check check, int n) {
  const DegreeRange range = check_degree_range(check);
  if (!range.contains(n)) {
    std::string msg = std::string(to_string(check)) + " check needs n >= " +
                      std::to_string(range.min);
    if (range.max != 0) msg += " and n <= " + std::to_string(range.max);
    throw std::invalid_argument(msg + ", got " + std::to_string(n));
  }
  double deviation = 0.0;
  switch (check) {
    case Check::Oracle: deviation = oracle_deviation(n); break;
    case Check::LeftInverse: deviation = verify_left_inverse(n); break;
    case Check::RightInverse: deviation = verify_right_inverse(n); break;
    case Check::BcInverse: deviation = verify_bc_inverse(n); break;
    case Check::Centrosymmetry: deviation = centrosymmetry_deviation(n); break;
    case Check::Symmetry: deviation = verify_d2_symmetry(n); break;
    case Check::CcWeights: deviation = cc_weights_deviation(n); break;
  }
  return {check, n, deviation, check_tolerance(check, n)};
}

}  // namespace chebgreen
