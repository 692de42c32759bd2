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

#ifndef CHEBGREEN_H
#define CHEBGREEN_H

/*
 * C interface to the chebgreen library: Chebyshev collocation operators and
 * the discrete Green matrix of y'' = f, y(-1) = y(1) = 0.
 *
 * Every fallible function returns a cg_status. On failure a description is
 * available from cg_last_error() on the same thread until the next call.
 * Grid values are always in descending node order, x_0 = 1, x_N = -1.
 * Matrices are opaque handles released with cg_matrix_free.
 */

#include <stddef.h>

#if defined(_WIN32)
#  if defined(CHEBGREEN_BUILDING)
#    define CG_API __declspec(dllexport)
#  else
#    define CG_API __declspec(dllimport)
#  endif
#else
#  define CG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cg_status {
  CG_OK = 0,
  CG_INVALID_ARGUMENT = 1, /* bad degree, unknown name, null pointer */
  CG_SIZE_MISMATCH = 2,    /* buffer length does not match the grid */
  CG_SINGULAR = 3,         /* factorization failed */
  CG_INTERNAL = 4
} cg_status;

typedef enum cg_operator {
  CG_OP_D = 0,          /* first derivative, (N+1) x (N+1) */
  CG_OP_D2,             /* D * D */
  CG_OP_D2_STRIPPED,    /* interior block of D2, (N-1) x (N-1) */
  CG_OP_PROJECTION,     /* [0 | I | 0], (N-1) x (N+1) */
  CG_OP_EXTENSION,      /* (N+1) x (N-1) */
  CG_OP_D2_BC,          /* [e_0; P D2; e_N] */
  CG_OP_GREEN_BC,       /* inverse of CG_OP_D2_BC */
  CG_OP_GREEN,          /* Green matrix */
  CG_OP_GRAM            /* consistent scalar product S */
} cg_operator;

typedef enum cg_method {
  CG_METHOD_DENSE_GREEN = 0,
  CG_METHOD_MATRIX_FREE,
  CG_METHOD_LINEAR_SYSTEM
} cg_method;

typedef enum cg_check {
  CG_CHECK_ORACLE = 0,
  CG_CHECK_LEFT_INVERSE,
  CG_CHECK_RIGHT_INVERSE,
  CG_CHECK_BC_INVERSE,
  CG_CHECK_CENTROSYMMETRY,
  CG_CHECK_SYMMETRY,
  CG_CHECK_CC_WEIGHTS
} cg_check;

typedef struct cg_matrix cg_matrix;

CG_API const char* cg_version(void);
CG_API const char* cg_last_error(void);

/* Fill `out` (length n+1) with the degree-n CGL points. */
CG_API cg_status cg_points(int n, double* out, size_t len);

/* Clenshaw-Curtis weights of the degree-m grid into `out` (length m+1). */
CG_API cg_status cg_cc_weights(int m, double* out, size_t len);

CG_API cg_status cg_green_matrix(int n, cg_matrix** out);
CG_API cg_status cg_operator_matrix(cg_operator op, int n, cg_matrix** out);
CG_API cg_status cg_reinterp_matrix(int n_from, int n_to, cg_matrix** out);

CG_API void cg_matrix_free(cg_matrix* m);
CG_API size_t cg_matrix_rows(const cg_matrix* m);
CG_API size_t cg_matrix_cols(const cg_matrix* m);
CG_API cg_status cg_matrix_get(const cg_matrix* m, size_t row, size_t col, double* value);
/* Row-major copy; len must equal rows * cols. */
CG_API cg_status cg_matrix_copy(const cg_matrix* m, double* out, size_t len);
/* y = M x. */
CG_API cg_status cg_matrix_apply(const cg_matrix* m, const double* x, size_t x_len, double* y,
                                 size_t y_len);

/* Green operator applied to node values f (length N+1) without forming the
 * matrix. N >= 2. `y` has length N+1. */
CG_API cg_status cg_apply_green_matrix_free(const double* f, size_t len, double* y);

/* Solve y'' = f with zero boundary values; f and y have length N+1. */
CG_API cg_status cg_solve_bvp(cg_method method, const double* f, size_t len, double* y);

CG_API cg_status cg_method_from_name(const char* name, cg_method* out);
CG_API const char* cg_method_name(cg_method method);

CG_API cg_status cg_check_from_name(const char* name, cg_check* out);
CG_API const char* cg_check_name(cg_check check);
/* Degree range of a check; *max_n is 0 when unbounded. */
CG_API cg_status cg_check_degree_range(cg_check check, int* min_n, int* max_n);
/* Run a check. *passed is 1 when deviation <= tolerance. */
CG_API cg_status cg_verify(cg_check check, int n, double* deviation, double* tolerance,
                           int* passed);

#ifdef __cplusplus
}
#endif

#endif /* CHEBGREEN_H */
