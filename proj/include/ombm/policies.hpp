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

#include "ombm/arrival.hpp"
#include "ombm/instance.hpp"
#include "ombm/prefs.hpp"
#include "ombm/rational.hpp"
#include "ombm/rng.hpp"

namespace ombm {

/// One realized online run. assignment[j] is the L-vertex matched to the
/// arrival labeled j; step_costs follow arrival order.
struct RunOutcome {
  std::vector<int> assignment;
  std::vector<Rational> step_costs;
  Rational total_cost;
};

/// Randomized Greedy: match each arrival to a minimum-cost free vertex,
/// ties broken uniformly at random. Deterministic given (instance, order,
/// rng state).
RunOutcome run_rg(const Instance& instance, const ArrivalOrder& order,
                  Rng& rng);

/// Deterministic Greedy: minimum-cost free vertex, ties broken by the
/// arrival's preference row.
RunOutcome run_dg(const Instance& instance, const ArrivalOrder& order,
                  const PreferenceMatrix& prefs);

}  // namespace ombm
