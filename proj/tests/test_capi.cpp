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

// Exercises the shared library strictly through its C header.

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <vector>

#include "chebgreen/chebgreen.h"

namespace {

struct Handle {
  cg_matrix* m = nullptr;
  ~Handle() { cg_matrix_free(m); }
};

}  // namespace

TEST(CApi, Points) {
  std::vector<double> x(5);
  ASSERT_EQ(cg_points(4, x.data(), x.size()), CG_OK);
  EXPECT_EQ(x[0], 1.0);
  EXPECT_EQ(x[2], 0.0);
  EXPECT_EQ(x[4], -1.0);
  EXPECT_EQ(cg_points(4, x.data(), 3), CG_SIZE_MISMATCH);
  EXPECT_EQ(cg_points(0, x.data(), 1), CG_INVALID_ARGUMENT);
  EXPECT_NE(std::strlen(cg_last_error()), 0u);
  EXPECT_EQ(cg_points(4, nullptr, 5), CG_INVALID_ARGUMENT);
}

TEST(CApi, CcWeights) {
  std::vector<double> w(3);
  ASSERT_EQ(cg_cc_weights(2, w.data(), w.size()), CG_OK);
  EXPECT_NEAR(w[1], 4.0 / 3.0, 1e-15);
}

TEST(CApi, GreenMatrixHandle) {
  Handle g;
  ASSERT_EQ(cg_green_matrix(3, &g.m), CG_OK);
  ASSERT_EQ(cg_matrix_rows(g.m), 4u);
  ASSERT_EQ(cg_matrix_cols(g.m), 4u);
  double v = 0.0;
  ASSERT_EQ(cg_matrix_get(g.m, 1, 1, &v), CG_OK);
  EXPECT_NEAR(v, -0.25, 1e-15);
  EXPECT_EQ(cg_matrix_get(g.m, 4, 0, &v), CG_INVALID_ARGUMENT);

  std::vector<double> all(16);
  ASSERT_EQ(cg_matrix_copy(g.m, all.data(), all.size()), CG_OK);
  double g12 = 0.0;
  cg_matrix_get(g.m, 1, 2, &g12);
  EXPECT_EQ(all[1 * 4 + 2], g12);
  EXPECT_EQ(cg_matrix_copy(g.m, all.data(), 15), CG_SIZE_MISMATCH);

  const std::vector<double> ones(4, 1.0);
  std::vector<double> y(4);
  ASSERT_EQ(cg_matrix_apply(g.m, ones.data(), 4, y.data(), 4), CG_OK);
  EXPECT_NEAR(y[1], -0.375, 1e-15);
  EXPECT_EQ(cg_matrix_apply(g.m, ones.data(), 3, y.data(), 4), CG_SIZE_MISMATCH);

  cg_matrix* bad = nullptr;
  EXPECT_EQ(cg_green_matrix(0, &bad), CG_INVALID_ARGUMENT);
  EXPECT_EQ(bad, nullptr);
}

TEST(CApi, OperatorShapes) {
  const int n = 6;
  struct Expect {
    cg_operator op;
    size_t rows, cols;
  };
  for (auto e : {Expect{CG_OP_D, 7, 7}, Expect{CG_OP_D2, 7, 7}, Expect{CG_OP_D2_STRIPPED, 5, 5},
                 Expect{CG_OP_PROJECTION, 5, 7}, Expect{CG_OP_EXTENSION, 7, 5},
                 Expect{CG_OP_D2_BC, 7, 7}, Expect{CG_OP_GREEN_BC, 7, 7},
                 Expect{CG_OP_GREEN, 7, 7}, Expect{CG_OP_GRAM, 7, 7}}) {
    Handle h;
    ASSERT_EQ(cg_operator_matrix(e.op, n, &h.m), CG_OK) << cg_last_error();
    EXPECT_EQ(cg_matrix_rows(h.m), e.rows);
    EXPECT_EQ(cg_matrix_cols(h.m), e.cols);
  }
  Handle h;
  EXPECT_EQ(cg_operator_matrix(static_cast<cg_operator>(99), n, &h.m), CG_INVALID_ARGUMENT);
  EXPECT_EQ(cg_operator_matrix(CG_OP_D2, 1, &h.m), CG_INVALID_ARGUMENT);

  Handle r;
  ASSERT_EQ(cg_reinterp_matrix(3, 6, &r.m), CG_OK);
  EXPECT_EQ(cg_matrix_rows(r.m), 7u);
  EXPECT_EQ(cg_matrix_cols(r.m), 4u);
}

TEST(CApi, SolveAndMatrixFree) {
  const std::vector<double> f(4, 1.0);
  std::vector<double> y(4);
  for (cg_method m : {CG_METHOD_DENSE_GREEN, CG_METHOD_MATRIX_FREE, CG_METHOD_LINEAR_SYSTEM}) {
    ASSERT_EQ(cg_solve_bvp(m, f.data(), f.size(), y.data()), CG_OK) << cg_method_name(m);
    EXPECT_NEAR(y[1], -0.375, 1e-14);
    EXPECT_EQ(y[0], 0.0);
  }
  ASSERT_EQ(cg_apply_green_matrix_free(f.data(), f.size(), y.data()), CG_OK);
  EXPECT_NEAR(y[2], -0.375, 1e-15);
  EXPECT_EQ(cg_solve_bvp(static_cast<cg_method>(7), f.data(), f.size(), y.data()),
            CG_INVALID_ARGUMENT);
  EXPECT_EQ(cg_apply_green_matrix_free(f.data(), 1, y.data()), CG_SIZE_MISMATCH);
}

TEST(CApi, Names) {
  cg_method m{};
  ASSERT_EQ(cg_method_from_name("linear-system", &m), CG_OK);
  EXPECT_EQ(m, CG_METHOD_LINEAR_SYSTEM);
  EXPECT_EQ(cg_method_from_name("cholesky", &m), CG_INVALID_ARGUMENT);

  cg_check c{};
  ASSERT_EQ(cg_check_from_name("bc-inverse", &c), CG_OK);
  EXPECT_EQ(c, CG_CHECK_BC_INVERSE);
  EXPECT_STREQ(cg_check_name(CG_CHECK_SYMMETRY), "symmetry");
  EXPECT_EQ(cg_check_from_name("nope", &c), CG_INVALID_ARGUMENT);

  int lo = 0, hi = 0;
  ASSERT_EQ(cg_check_degree_range(CG_CHECK_ORACLE, &lo, &hi), CG_OK);
  EXPECT_EQ(lo, 1);
  EXPECT_EQ(hi, 10);
}

TEST(CApi, Verify) {
  double dev = 0.0, tol = 0.0;
  int passed = 0;
  ASSERT_EQ(cg_verify(CG_CHECK_LEFT_INVERSE, 8, &dev, &tol, &passed), CG_OK);
  EXPECT_EQ(passed, 1);
  EXPECT_LT(dev, 1e-10);
  EXPECT_EQ(cg_verify(CG_CHECK_RIGHT_INVERSE, 2, &dev, &tol, &passed), CG_INVALID_ARGUMENT);
}

TEST(CApi, FreeNullIsHarmless) {
  cg_matrix_free(nullptr);
  EXPECT_EQ(cg_matrix_rows(nullptr), 0u);
}
