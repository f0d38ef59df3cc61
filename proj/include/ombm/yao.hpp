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

#include <cstdint>
#include <vector>

#include "ombm/prefs.hpp"
#include "ombm/rational.hpp"

namespace ombm {

/// Evaluation mode for the lower-bound family: either every (pi, sigma)
/// pair with exact arithmetic, or seeded sampling with a Hoeffding margin.
struct YaoMode {
  enum class Kind { exhaustive, sampled };

  static YaoMode exhaustive() { return {Kind::exhaustive, 0, 0}; }
  static YaoMode sampled(std::uint64_t trials, std::uint64_t seed) {
    return {Kind::sampled, trials, seed};
  }

  Kind kind;
  std::uint64_t trials;
  std::uint64_t seed;
};

struct YaoResult {
  Rational expected_cost;  // exact mean, or the sample mean as a fraction
  bool exact;
  double hoeffding_half_width;  // 0 in exhaustive mode; 95% bound otherwise
  std::uint64_t samples;        // (n!)^2 or the trial count
};

/// Cost of the zero-first deterministic greedy with tie-break rows `prefs`
/// on the lower-bound instance built from pi, under arrival order sigma.
/// Runs take integer costs in [1, n].
int zero_first_family_cost(int n, const std::vector<int>& pi,
                           const std::vector<int>& sigma,
                           const PreferenceMatrix& prefs);

/// Expected cost of the matrix's zero-first canonicalization averaged over
/// the instance family (uniform pi) and arrival order (uniform sigma).
/// run_dg always takes a free zero edge, so raw and canonicalized matrices
/// score identically. Exhaustive mode requires n <= 6.
YaoResult yao_expected_cost(int n, const PreferenceMatrix& prefs,
                            const YaoMode& mode);

/// All n! permutations of {0, ..., n-1} in lexicographic order.
std::vector<std::vector<int>> all_permutations(int n);

/// Every preference matrix over n vertices ((n!)^n of them); capped at
/// n <= 3.
std::vector<PreferenceMatrix> enumerate_preference_matrices(int n);

}  // namespace ombm
