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

#include "chebgreen/chebgreen.h"

#include <Eigen/Dense>

#include <exception>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebgreen/cheb_core.hpp"
#include "chebgreen/green_operator.hpp"
#include "chebgreen/quadrature.hpp"
#include "chebgreen/spectral_operators.hpp"
#include "chebgreen/verify.hpp"

struct cg_matrix {
  Eigen::MatrixXd entries;
};

namespace {

thread_local std::string last_error;

class SizeMismatch : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

cg_status fail(cg_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
cg_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return CG_OK;
  } catch (const SizeMismatch& e) {
    return fail(CG_SIZE_MISMATCH, e.what());
  } catch (const chebgreen::SingularMatrixError& e) {
    return fail(CG_SINGULAR, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(CG_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(CG_INVALID_ARGUMENT, e.what());
  } catch (const std::domain_error& e) {
    return fail(CG_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(CG_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CG_INTERNAL, e.what());
  } catch (...) {
    return fail(CG_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) throw std::invalid_argument(std::string(name) + " is null");
}

void require_len(size_t got, size_t want, const char* name) {
  if (got != want) {
    throw SizeMismatch(std::string(name) + ": length " + std::to_string(got) + ", expected " +
                       std::to_string(want));
  }
}

chebgreen::NodeVector node_vector(const double* values, size_t len) {
  require(values, "input vector");
  if (len < 2) throw SizeMismatch("input vector: need at least 2 node values");
  return chebgreen::NodeVector(std::vector<double>(values, values + len));
}

void copy_out(const chebgreen::NodeVector& v, double* out) {
  std::copy(v.values().begin(), v.values().end(), out);
}

void hand_out(Eigen::MatrixXd m, cg_matrix** out) { *out = new cg_matrix{std::move(m)}; }

}  // namespace

extern "C" {

const char* cg_version(void) { return "1.0.0"; }

const char* cg_last_error(void) { return last_error.c_str(); }

cg_status cg_points(int n, double* out, size_t len) {
  return guarded([&] {
    require(out, "out");
    const std::vector<double> x = chebgreen::cgl_points(n);
    require_len(len, x.size(), "out");
    std::copy(x.begin(), x.end(), out);
  });
}

cg_status cg_cc_weights(int m, double* out, size_t len) {
  return guarded([&] {
    require(out, "out");
    const chebgreen::QuadratureWeights w = chebgreen::cc_weights(m);
    require_len(len, w.weights.size(), "out");
    std::copy(w.weights.begin(), w.weights.end(), out);
  });
}

cg_status cg_green_matrix(int n, cg_matrix** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    hand_out(chebgreen::green_matrix(n).entries(), out);
  });
}

cg_status cg_operator_matrix(cg_operator op, int n, cg_matrix** out) {
  using namespace chebgreen;
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    switch (op) {
      case CG_OP_D: hand_out(diff_matrix(n).entries, out); return;
      case CG_OP_D2: hand_out(diff2_matrix(n).entries, out); return;
      case CG_OP_D2_STRIPPED: hand_out(strip(diff2_matrix(n)).entries, out); return;
      case CG_OP_PROJECTION: hand_out(projection_matrix(n).entries, out); return;
      case CG_OP_EXTENSION: hand_out(extension_matrix(n).entries, out); return;
      case CG_OP_D2_BC: hand_out(diff2_bc_matrix(n).entries, out); return;
      case CG_OP_GREEN_BC: hand_out(green_bc_matrix(n).entries, out); return;
      case CG_OP_GREEN: hand_out(green_matrix(n).entries(), out); return;
      case CG_OP_GRAM: hand_out(consistent_gram_matrix(n).entries, out); return;
    }
    throw std::invalid_argument("unknown operator kind " + std::to_string(static_cast<int>(op)));
  });
}

cg_status cg_reinterp_matrix(int n_from, int n_to, cg_matrix** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    hand_out(chebgreen::reinterp_matrix(n_from, n_to).entries, out);
  });
}

void cg_matrix_free(cg_matrix* m) { delete m; }

size_t cg_matrix_rows(const cg_matrix* m) {
  return m ? static_cast<size_t>(m->entries.rows()) : 0;
}

size_t cg_matrix_cols(const cg_matrix* m) {
  return m ? static_cast<size_t>(m->entries.cols()) : 0;
}

cg_status cg_matrix_get(const cg_matrix* m, size_t row, size_t col, double* value) {
  return guarded([&] {
    require(m, "matrix");
    require(value, "value");
    if (row >= cg_matrix_rows(m) || col >= cg_matrix_cols(m)) {
      throw std::out_of_range("matrix index out of range");
    }
    *value = m->entries(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  });
}

cg_status cg_matrix_copy(const cg_matrix* m, double* out, size_t len) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    require_len(len, cg_matrix_rows(m) * cg_matrix_cols(m), "out");
    using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
    Eigen::Map<RowMajor>(out, m->entries.rows(), m->entries.cols()) = m->entries;
  });
}

cg_status cg_matrix_apply(const cg_matrix* m, const double* x, size_t x_len, double* y,
                          size_t y_len) {
  return guarded([&] {
    require(m, "matrix");
    require(x, "x");
    require(y, "y");
    require_len(x_len, cg_matrix_cols(m), "x");
    require_len(y_len, cg_matrix_rows(m), "y");
    const Eigen::Map<const Eigen::VectorXd> in(x, static_cast<Eigen::Index>(x_len));
    const Eigen::VectorXd result = m->entries * in;
    std::copy(result.begin(), result.end(), y);
  });
}

cg_status cg_apply_green_matrix_free(const double* f, size_t len, double* y) {
  return guarded([&] {
    require(y, "y");
    copy_out(chebgreen::apply_green_matrix_free(node_vector(f, len)), y);
  });
}

cg_status cg_solve_bvp(cg_method method, const double* f, size_t len, double* y) {
  using chebgreen::SolveMethod;
  return guarded([&] {
    require(y, "y");
    SolveMethod m{};
    switch (method) {
      case CG_METHOD_DENSE_GREEN: m = SolveMethod::DenseGreen; break;
      case CG_METHOD_MATRIX_FREE: m = SolveMethod::MatrixFree; break;
      case CG_METHOD_LINEAR_SYSTEM: m = SolveMethod::LinearSystem; break;
      default:
        throw std::invalid_argument("unknown solve method " +
                                    std::to_string(static_cast<int>(method)));
    }
    copy_out(chebgreen::solve_bvp(node_vector(f, len), m), y);
  });
}

cg_status cg_method_from_name(const char* name, cg_method* out) {
  using chebgreen::SolveMethod;
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    switch (chebgreen::parse_solve_method(name)) {
      case SolveMethod::DenseGreen: *out = CG_METHOD_DENSE_GREEN; break;
      case SolveMethod::MatrixFree: *out = CG_METHOD_MATRIX_FREE; break;
      case SolveMethod::LinearSystem: *out = CG_METHOD_LINEAR_SYSTEM; break;
    }
  });
}

const char* cg_method_name(cg_method method) {
  switch (method) {
    case CG_METHOD_DENSE_GREEN: return "dense-green";
    case CG_METHOD_MATRIX_FREE: return "matrix-free";
    case CG_METHOD_LINEAR_SYSTEM: return "linear-system";
  }
  return nullptr;
}

}  // extern "C"

namespace {

bool to_check(cg_check c, chebgreen::Check& out) {
  const int idx = static_cast<int>(c);
  if (idx < 0 || idx >= static_cast<int>(std::size(chebgreen::kAllChecks))) return false;
  out = chebgreen::kAllChecks[idx];
  return true;
}

}  // namespace

extern "C" {

cg_status cg_check_from_name(const char* name, cg_check* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const auto check = chebgreen::parse_check(name);
    if (!check) throw std::invalid_argument(std::string("unknown check '") + name + "'");
    for (int i = 0; i < static_cast<int>(std::size(chebgreen::kAllChecks)); ++i) {
      if (chebgreen::kAllChecks[i] == *check) *out = static_cast<cg_check>(i);
    }
  });
}

const char* cg_check_name(cg_check check) {
  chebgreen::Check c{};
  if (!to_check(check, c)) return nullptr;
  return chebgreen::to_string(c).data();
}

cg_status cg_check_degree_range(cg_check check, int* min_n, int* max_n) {
  return guarded([&] {
    require(min_n, "min_n");
    require(max_n, "max_n");
    chebgreen::Check c{};
    if (!to_check(check, c)) throw std::invalid_argument("unknown check");
    const chebgreen::DegreeRange r = chebgreen::check_degree_range(c);
    *min_n = r.min;
    *max_n = r.max;
  });
}

cg_status cg_verify(cg_check check, int n, double* deviation, double* tolerance, int* passed) {
  return guarded([&] {
    require(deviation, "deviation");
    require(tolerance, "tolerance");
    require(passed, "passed");
    chebgreen::Check c{};
    if (!to_check(check, c)) throw std::invalid_argument("unknown check");
    const chebgreen::CheckResult r = chebgreen::run_check(c, n);
    *deviation = r.deviation;
    *tolerance = r.tolerance;
    *passed = r.passed() ? 1 : 0;
  });
}

}  // extern "C"
