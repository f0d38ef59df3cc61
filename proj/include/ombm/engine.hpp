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

#include "ombm/arrival.hpp"
#include "ombm/instance.hpp"
#include "ombm/rational.hpp"

namespace ombm {

struct EngineOptions {
  /// Largest instance the subset-state recursion will accept. The state
  /// space grows like C(2n, n), so this is a memory cap as much as a time
  /// cap.
  int cap = 12;
};

/// Exact expected total cost of randomized greedy, by memoized recursion
/// over (free L-subset, remaining R-subset) states. Under random order the
/// next arrival is averaged uniformly over the remaining R-vertices, which
/// is equivalent to a uniformly random permutation; at every state the tie
/// average runs over the exact free argmin set. Expected remaining cost
/// depends only on the state, so totals add linearly along the recursion.
///
/// Throws ResourceLimitError when n exceeds options.cap.
Rational exact_expected_cost(const Instance& instance,
                             const ArrivalModel& model,
                             const EngineOptions& options = {});

}  // namespace ombm
