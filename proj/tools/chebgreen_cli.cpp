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

// chebgreen: build Green matrices, solve y'' = f, run the identity checks and
// time the operators from the command line.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error,
// 3 I/O or library failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chebgreen/chebgreen.h"
#include "matrix_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Library failures caused by bad input are usage errors, the rest are not.
void check(cg_status status) {
  if (status == CG_OK) return;
  const std::string msg = cg_last_error();
  if (status == CG_INVALID_ARGUMENT || status == CG_SIZE_MISMATCH) throw UsageError(msg);
  throw std::runtime_error(msg);
}

struct MatrixDeleter {
  void operator()(cg_matrix* m) const noexcept { cg_matrix_free(m); }
};
using MatrixHandle = std::unique_ptr<cg_matrix, MatrixDeleter>;

chebgreen::io::DenseMatrix to_dense(const cg_matrix* m) {
  chebgreen::io::DenseMatrix d{cg_matrix_rows(m), cg_matrix_cols(m), {}};
  d.values.resize(d.rows * d.cols);
  check(cg_matrix_copy(m, d.values.data(), d.values.size()));
  return d;
}

std::vector<double> points(int n) {
  std::vector<double> x(static_cast<std::size_t>(n) + 1);
  check(cg_points(n, x.data(), x.size()));
  return x;
}

// Writes through `emit` to the named file, or stdout for "-".
template <class Emit>
void write_output(const std::string& path, Emit&& emit) {
  if (path == "-") {
    emit(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  emit(os);
  os.flush();
  if (!os) throw IoError("failed writing '" + path + "'");
}

std::vector<double> sample_rhs(const std::string& spec, int n) {
  const std::vector<double> x = points(n);
  std::vector<double> f(x.size());
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    std::ifstream is(path);
    if (!is) throw UsageError("cannot read rhs file '" + path + "'");
    try {
      f = chebgreen::io::read_column(is);
    } catch (const std::invalid_argument& e) {
      throw UsageError("rhs file '" + path + "': " + e.what());
    }
    if (f.size() != x.size()) {
      throw UsageError("rhs file '" + path + "' has " + std::to_string(f.size()) +
                       " values, expected n+1 = " + std::to_string(x.size()));
    }
    return f;
  }
  double (*fn)(double) = nullptr;
  if (spec == "one") {
    fn = [](double) { return 1.0; };
  } else if (spec == "x") {
    fn = [](double t) { return t; };
  } else if (spec == "exp") {
    fn = [](double t) { return std::exp(t); };
  } else if (spec == "sin") {
    fn = [](double t) { return std::sin(t); };
  } else {
    throw UsageError("unknown rhs '" + spec + "' (expected one, x, exp, sin or file:<path>)");
  }
  std::transform(x.begin(), x.end(), f.begin(), fn);
  return f;
}

int cmd_green(int n, const std::string& out, const std::string& format, bool ascending) {
  cg_matrix* raw = nullptr;
  check(cg_green_matrix(n, &raw));
  MatrixHandle g(raw);
  chebgreen::io::DenseMatrix m = to_dense(g.get());
  if (ascending) m = chebgreen::io::reversed(m);
  const char* ordering = ascending ? "ascending" : "descending";
  write_output(out, [&](std::ostream& os) {
    if (format == "json") {
      chebgreen::io::write_matrix_json(os, m, n, ordering);
    } else {
      chebgreen::io::write_csv(os, m);
    }
  });
  return kExitOk;
}

int cmd_solve(int n, const std::string& rhs, const std::string& method_name,
              const std::string& out) {
  cg_method method{};
  check(cg_method_from_name(method_name.c_str(), &method));
  const std::vector<double> f = sample_rhs(rhs, n);
  std::vector<double> y(f.size());
  check(cg_solve_bvp(method, f.data(), f.size(), y.data()));
  write_output(out, [&](std::ostream& os) { chebgreen::io::write_column(os, y); });
  return kExitOk;
}

nlohmann::json run_one_check(cg_check c, int n) {
  double deviation = 0.0;
  double tolerance = 0.0;
  int passed = 0;
  check(cg_verify(c, n, &deviation, &tolerance, &passed));
  return {{"check", cg_check_name(c)},
          {"n", n},
          {"deviation", deviation},
          {"tolerance", tolerance},
          {"passed", passed != 0}};
}

int cmd_verify(int n, const std::string& which) {
  nlohmann::json results = nlohmann::json::array();
  nlohmann::json skipped = nlohmann::json::array();
  bool all_passed = true;

  if (which == "all") {
    for (int i = CG_CHECK_ORACLE; i <= CG_CHECK_CC_WEIGHTS; ++i) {
      const auto c = static_cast<cg_check>(i);
      int lo = 0;
      int hi = 0;
      check(cg_check_degree_range(c, &lo, &hi));
      if (n < lo || (hi != 0 && n > hi)) {
        skipped.push_back(cg_check_name(c));
        continue;
      }
      results.push_back(run_one_check(c, n));
    }
  } else {
    cg_check c{};
    check(cg_check_from_name(which.c_str(), &c));
    results.push_back(run_one_check(c, n));
  }
  for (const auto& r : results) all_passed = all_passed && r["passed"].get<bool>();

  nlohmann::json doc = {{"n", n}, {"results", results}, {"passed", all_passed}};
  if (!skipped.empty()) doc["skipped"] = skipped;
  std::cout << doc.dump(2) << '\n';
  return all_passed ? kExitOk : kExitVerifyFailed;
}

template <class F>
double median_ms(int repeat, F&& body) {
  std::vector<double> samples;
  samples.reserve(static_cast<std::size_t>(repeat));
  for (int r = 0; r < repeat; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    samples.push_back(std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 ? samples[mid] : 0.5 * (samples[mid - 1] + samples[mid]);
}

std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> ns;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int n = 0;
    try {
      n = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("bad --n-list entry '" + item + "'");
    }
    if (used != item.size()) throw UsageError("bad --n-list entry '" + item + "'");
    if (n < 3) throw UsageError("--n-list entries must be >= 3, got " + item);
    ns.push_back(n);
  }
  if (ns.empty()) throw UsageError("--n-list is empty");
  return ns;
}

int cmd_bench(const std::string& n_list, int repeat, const std::string& out) {
  const std::vector<int> ns = parse_n_list(n_list);
  nlohmann::json rows = nlohmann::json::array();
  for (int n : ns) {
    const std::vector<double> x = points(n);
    std::vector<double> f(x.size());
    std::transform(x.begin(), x.end(), f.begin(), [](double t) { return std::exp(t); });
    std::vector<double> y(f.size());

    MatrixHandle g;
    const double build = median_ms(repeat, [&] {
      cg_matrix* raw = nullptr;
      check(cg_green_matrix(n, &raw));
      g.reset(raw);
    });
    const double diff2 = median_ms(repeat, [&] {
      cg_matrix* raw = nullptr;
      check(cg_operator_matrix(CG_OP_D2, n, &raw));
      MatrixHandle d2(raw);
    });
    const double dense = median_ms(repeat, [&] {
      check(cg_matrix_apply(g.get(), f.data(), f.size(), y.data(), y.size()));
    });
    const double free_apply = median_ms(repeat, [&] {
      check(cg_apply_green_matrix_free(f.data(), f.size(), y.data()));
    });
    const double stripped = median_ms(repeat, [&] {
      check(cg_solve_bvp(CG_METHOD_LINEAR_SYSTEM, f.data(), f.size(), y.data()));
    });
    rows.push_back({{"n", n},
                    {"times_ms",
                     {{"green_build", build},
                      {"diff2_build", diff2},
                      {"dense_apply", dense},
                      {"matrix_free_apply", free_apply},
                      {"stripped_solve", stripped}}}});
  }
  write_output(out, [&](std::ostream& os) { os << rows.dump(2) << '\n'; });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chebyshev collocation Green matrix toolkit"};
  app.require_subcommand(1);

  int n = 0;
  std::string out = "-";

  auto* green = app.add_subcommand("green", "Write the Green matrix of degree n");
  std::string format = "csv";
  bool ascending = false;
  green->add_option("--n", n, "Polynomial degree (n >= 1)")->required()->check(CLI::PositiveNumber);
  green->add_option("--out", out, "Output path, '-' for stdout");
  green->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  green->add_flag("--ascending", ascending, "Order nodes from -1 to 1");

  auto* solve = app.add_subcommand("solve", "Solve y'' = f, y(-1) = y(1) = 0");
  std::string rhs = "one";
  std::string method = "dense-green";
  solve->add_option("--n", n, "Polynomial degree")->required()->check(CLI::PositiveNumber);
  solve->add_option("--rhs", rhs, "one, x, exp, sin or file:<path>");
  solve->add_option("--method", method, "dense-green, matrix-free or linear-system")
      ->check(CLI::IsMember({"dense-green", "matrix-free", "linear-system"}));
  solve->add_option("--out", out, "Output path, '-' for stdout");

  auto* verify = app.add_subcommand("verify", "Run identity checks and report deviations");
  std::string which = "all";
  verify->add_option("--n", n, "Polynomial degree")->required()->check(CLI::PositiveNumber);
  verify->add_option("--check", which,
                     "oracle, left-inverse, right-inverse, bc-inverse, centrosymmetry, "
                     "symmetry, cc-weights or all")
      ->check(CLI::IsMember({"oracle", "left-inverse", "right-inverse", "bc-inverse",
                             "centrosymmetry", "symmetry", "cc-weights", "all"}));

  auto* bench = app.add_subcommand("bench", "Time construction and application");
  std::string n_list = "256,512,1024";
  int repeat = 5;
  bench->add_option("--n-list", n_list, "Comma-separated degrees (each >= 3)");
  bench->add_option("--repeat", repeat, "Repetitions per measurement")
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", out, "Output path, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*green) return cmd_green(n, out, format, ascending);
    if (*solve) return cmd_solve(n, rhs, method, out);
    if (*verify) return cmd_verify(n, which);
    if (*bench) return cmd_bench(n_list, repeat, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitUsage;
}
