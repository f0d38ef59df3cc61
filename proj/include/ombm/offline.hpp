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

#include <vector>

#include "ombm/instance.hpp"
#include "ombm/rational.hpp"

namespace ombm {

/// Minimum-cost perfect matching. matching[i] is the R-vertex assigned to
/// L-vertex i; among optimal matchings it is the lexicographically smallest
/// assignment vector, so outputs are stable goldens.
struct OptResult {
  Rational cost;
  std::vector<int> matching;
};

/// Exact O(n^3) assignment (potentials method) followed by a lexicographic
/// tie-break inside the tight graph of the optimal duals.
OptResult solve_assignment(const Instance& instance);

/// Uniform-metric shortcut: cost is n minus a maximum matching on zero-cost
/// edges. Returns the same lexicographically smallest optimal matching as
/// solve_assignment. Throws UnsupportedMetricError on general instances.
OptResult solve_uniform(const Instance& instance);

/// Offline optimal cost without constructing a canonical matching; the cheap
/// path for simulation loops.
Rational optimal_cost(const Instance& instance);

}  // namespace ombm
