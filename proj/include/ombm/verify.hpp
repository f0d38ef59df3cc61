// Copyright 2026 The OMBM Authors
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

#include <functional>
#include <string>
#include <vector>

#include "ombm/rational.hpp"

namespace ombm {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // first witnessing coordinates on failure
};

struct VerifyOptions {
  int f_n_max = 500;     // recurrence_F(n) == tau(n) range
  int fkn_n_max = 300;   // F(k, n) bound range
  int engine_n_max = 7;  // engine-vs-recurrence equality range
};

/// Row-step signature of the F(k, n) dynamic program, injectable so the
/// checks can be demonstrated to fail on a perturbed recurrence.
using FknRowStep =
    std::function<std::vector<Rational>(int, const std::vector<Rational>&)>;

/// recurrence_F(n) == tau(n) exactly for 1 <= n <= n_max.
std::vector<CheckResult> check_f_equals_tau(int n_max);

/// Sweeps F(., n) rows for 1 <= n <= n_max and checks, exactly:
///   - base cases F(0, 1) = 1 and F(1, 1) = 0,
///   - F(k, n) <= (n - k) tau(n) for all 0 <= k <= n,
///   - equality at k = n - 1 (the bound is attained there),
///   - boundary identities F(n, n) = 0 and F(0, n) = n.
std::vector<CheckResult> check_fkn_rows(int n_max, const FknRowStep& step);

/// exact_expected_cost(uniform_k(n, k), random order) == F(k, n) for all
/// 0 <= k <= n <= n_max: the expectation engine independently reproduces the
/// recurrence.
std::vector<CheckResult> check_engine_matches_fkn(int n_max);

/// The full suite in report order.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace ombm
