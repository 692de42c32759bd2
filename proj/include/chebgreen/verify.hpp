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

// Named identity checks with their pass thresholds, shared by the C API and
// the command-line `verify` subcommand.

#include <optional>
#include <span>
#include <string_view>

namespace chebgreen {

enum class Check {
  Oracle,
  LeftInverse,
  RightInverse,
  BcInverse,
  Centrosymmetry,
  Symmetry,
  CcWeights,
};

inline constexpr Check kAllChecks[] = {Check::Oracle,         Check::LeftInverse,
                                       Check::RightInverse,   Check::BcInverse,
                                       Check::Centrosymmetry, Check::Symmetry,
                                       Check::CcWeights};

std::string_view to_string(Check check);
std::optional<Check> parse_check(std::string_view name);

/// Inclusive degree range the check is defined on; max is 0 when unbounded.
struct DegreeRange {
  int min;
  int max;
  bool contains(int n) const noexcept { return n >= min && (max == 0 || n <= max); }
};

DegreeRange check_degree_range(Check check);

/// Pass threshold for the check at degree n.
double check_tolerance(Check check, int n);

struct CheckResult {
  Check check;
  int degree;
  double deviation;
  double tolerance;
  bool passed() const noexcept { return deviation <= tolerance; }
};

/// Runs one check. Throws std::invalid_argument if n is outside the check's
/// degree range.
CheckResult run_check(Check check, int n);

}  // namespace chebgreen
