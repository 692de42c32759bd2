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

#include <gtest/gtest.h>

#include "chebgreen/coeff_calculus.hpp"
#include "chebgreen/oracle.hpp"
#include "chebgreen/quadrature.hpp"
#include "test_support.hpp"

using namespace chebgreen;
using namespace chebgreen::testing;

namespace {

// Derivative of a Chebyshev series: b_{k-1} = b_{k+1} + 2k a_k, b_0 halved.
std::vector<double> differentiate(std::span<const double> a) {
  const std::size_t len = a.size();
  std::vector<double> b(len + 1, 0.0);
  for (std::size_t k = len - 1; k >= 1; --k) b[k - 1] = b[k + 1] + 2.0 * k * a[k];
  b[0] *= 0.5;
  b.resize(len);
  return b;
}

}  // namespace

TEST(Extend, PadsWithZeros) {
  const auto e = extend(CoeffVector({1.0, 2.0}), 3);
  EXPECT_EQ(std::vector<double>(e.values().begin(), e.values().end()),
            (std::vector<double>{1, 2, 0, 0, 0}));
  const auto same = extend(CoeffVector({1.0, 2.0}), 0);
  EXPECT_EQ(same.size(), 2u);
  EXPECT_THROW(extend(CoeffVector({1.0}), -1), std::invalid_argument);
}

TEST(Extend, FineGridInterlacesCoarse) {
  const int n = 9;
  const auto u = random_vector(n + 1, 21);
  const auto coeffs = node_to_coeffs(NodeVector(u));
  const auto fine = coeffs_to_nodes(extend(coeffs, n));
  for (int m = 0; m <= n; ++m) EXPECT_NEAR(fine[2 * m], u[m], 1e-14);
}

TEST(IntegrateCoeffs, ChebyshevRules) {
  const auto t0 = integrate_coeffs(CoeffVector({1.0, 0.0, 0.0}));
  EXPECT_DOUBLE_EQ(t0[0], 0.0);
  EXPECT_DOUBLE_EQ(t0[1], 1.0);
  EXPECT_DOUBLE_EQ(t0[2], 0.0);

  const auto t1 = integrate_coeffs(CoeffVector({0.0, 1.0, 0.0, 0.0}));
  EXPECT_DOUBLE_EQ(t1[0], 0.25);
  EXPECT_DOUBLE_EQ(t1[1], 0.0);
  EXPECT_DOUBLE_EQ(t1[2], 0.25);
  EXPECT_DOUBLE_EQ(t1[3], 0.0);

  const auto t2 = integrate_coeffs(CoeffVector({0.0, 0.0, 1.0, 0.0, 0.0}));
  EXPECT_DOUBLE_EQ(t2[0], 0.0);
  EXPECT_DOUBLE_EQ(t2[1], -0.5);
  EXPECT_DOUBLE_EQ(t2[2], 0.0);
  EXPECT_DOUBLE_EQ(t2[3], 1.0 / 6.0);
  EXPECT_DOUBLE_EQ(t2[4], 0.0);
}

TEST(IntegrateCoeffs, RejectsTruncation) {
  EXPECT_THROW(integrate_coeffs(CoeffVector({0.0, 0.0, 1.0})), std::invalid_argument);
  EXPECT_THROW(integrate_coeffs(CoeffVector({1.0, 0.0})), std::invalid_argument);
}

TEST(IntegrateCoeffs, DifferentiationUndoesIntegration) {
  for (int len : {3, 4, 8, 33}) {
    auto a = random_vector(len, 40u + static_cast<unsigned>(len));
    a.back() = 0.0;
    const auto primitive = integrate_coeffs(CoeffVector(a));
    const auto back = differentiate(primitive.values());
    EXPECT_LT(max_abs_diff(back, a), 1e-14) << "len=" << len;
  }
}

TEST(Reduce, KeepsEvenEntries) {
  EXPECT_EQ(reduce_fine_to_coarse(std::vector<double>{1, 2, 3, 4, 5}),
            (std::vector<double>{1, 3, 5}));
  EXPECT_EQ(reduce_fine_to_coarse(std::vector<double>{1, 2, 3}).size(), 2u);
  EXPECT_THROW(reduce_fine_to_coarse(std::vector<double>{1, 2, 3, 4}), std::invalid_argument);
}

TEST(Reduce, InterlacingIdentity) {
  const int n = 9;
  const CoeffVector c(random_vector(n + 1, 8));
  const auto coarse = coeffs_to_nodes(c);
  const auto fine = coeffs_to_nodes(extend(c, n));
  EXPECT_LT(max_abs_diff(reduce_fine_to_coarse(fine.values()), coarse.values()), 1e-13);
}

TEST(LagrangeIntegrals, QuadraticBasis) {
  const auto l1 = lagrange_integrals(1, 2);
  const std::vector<double> up{4.0 / 3.0, 2.0 / 3.0, 0.0};
  const std::vector<double> down{0.0, 2.0 / 3.0, 4.0 / 3.0};
  EXPECT_LT(max_abs_diff(l1.up.values(), up), 1e-15);
  EXPECT_LT(max_abs_diff(l1.down.values(), down), 1e-15);

  const auto l0 = lagrange_integrals(0, 2);
  EXPECT_NEAR(l0.up[0], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(l0.up[1], -1.0 / 12.0, 1e-15);
  EXPECT_EQ(l0.up[2], 0.0);
}

TEST(LagrangeIntegrals, AnchorsAreExactZeros) {
  for (int n : {1, 2, 3, 7, 64}) {
    for (int i = 0; i <= n; ++i) {
      const auto l = lagrange_integrals(i, n);
      EXPECT_EQ(l.up[n], 0.0);
      EXPECT_EQ(l.down[0], 0.0);
      const double total = l.up[0];
      for (int k = 0; k <= n; ++k) EXPECT_NEAR(l.up[k] + l.down[k], total, 1e-14);
    }
  }
}

TEST(LagrangeIntegrals, MatchMonomialOracle) {
  for (int n = 1; n <= 10; ++n) {
    const ChebGrid grid(n);
    for (int i = 0; i <= n; ++i) {
      const auto poly = oracle::lagrange_monomial_coeffs(i, grid);
      const auto l = lagrange_integrals(i, n);
      for (int k = 0; k <= n; ++k) {
        EXPECT_NEAR(l.up[k], oracle::integrate_monomial(poly, -1.0, grid[k]), 1e-12);
        EXPECT_NEAR(l.down[k], oracle::integrate_monomial(poly, grid[k], 1.0), 1e-12);
      }
    }
  }
}

TEST(LagrangeIntegrals, PartitionOfUnity) {
  for (int n : {1, 4, 17, 64}) {
    const auto x = cgl_points(n);
    std::vector<double> sum(n + 1, 0.0);
    for (int i = 0; i <= n; ++i) {
      const auto l = lagrange_integrals(i, n);
      for (int k = 0; k <= n; ++k) sum[k] += l.up[k];
    }
    for (int k = 0; k <= n; ++k) EXPECT_NEAR(sum[k], x[k] + 1.0, 1e-12);
  }
}

TEST(LagrangeIntegrals, FullIntervalIsClenshawCurtisWeight) {
  for (int n : {1, 2, 5, 16, 31}) {
    const auto w = cc_weights(n);
    for (int i = 0; i <= n; ++i) EXPECT_NEAR(lagrange_integrals(i, n).up[0], w.weights[i], 1e-13);
  }
}

TEST(LagrangeIntegrals, RejectsBadIndex) {
  EXPECT_THROW(lagrange_integrals(3, 2), std::out_of_range);
  EXPECT_THROW(lagrange_integrals(-1, 2), std::out_of_range);
  EXPECT_THROW(lagrange_integrals(0, 0), std::invalid_argument);
}

TEST(NodePolyPrimitive, Degree3Endpoint) {
  const auto p = node_poly_primitive(0, 3);
  EXPECT_NEAR(p.up[0], 2.0 / 45.0, 1e-15);
}

TEST(NodePolyPrimitive, AnchorsAndTelescoping) {
  for (int n : {3, 4, 9, 64}) {
    for (int i = 0; i <= n; ++i) {
      const auto p = node_poly_primitive(i, n);
      EXPECT_EQ(p.down[0], 0.0);
      EXPECT_EQ(p.up[n], 0.0);
      for (int k = 0; k <= n; ++k) EXPECT_NEAR(p.up[k] + p.down[k], p.up[0], 1e-15);
    }
  }
}

TEST(NodePolyPrimitive, FirstMomentMatchesOracle) {
  // integral from -1 to x_k of xi l_i(xi) = P_up + x_i L_up
  for (int n = 3; n <= 10; ++n) {
    const ChebGrid grid(n);
    for (int i = 0; i <= n; ++i) {
      const auto l = oracle::lagrange_monomial_coeffs(i, grid);
      std::vector<double> xl(l.size() + 1, 0.0);
      for (std::size_t p = 0; p < l.size(); ++p) xl[p + 1] = l[p];
      const auto pp = node_poly_primitive(i, n);
      const auto li = lagrange_integrals(i, n);
      for (int k = 0; k <= n; ++k) {
        const double expected = oracle::integrate_monomial(xl, -1.0, grid[k]);
        EXPECT_NEAR(pp.up[k] + grid[i] * li.up[k], expected, 1e-12) << n << " " << i << " " << k;
      }
    }
  }
}

TEST(NodePolyPrimitive, RejectsSmallDegree) {
  EXPECT_THROW(node_poly_primitive(0, 2), std::invalid_argument);
  EXPECT_THROW(node_poly_primitive(4, 3), std::out_of_range);
}
