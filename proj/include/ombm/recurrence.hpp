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

#include "ombm/rational.hpp"

namespace ombm {

/// Expected randomized-greedy cost on the n-point one-cheap-edge instance
/// (make_example1), via the recurrence
///   F(n) = 1 + (1/n) * sum_{t=1..n-1} (1 - 1/(n-t+1)) F(n-t),  F(1) = 1.
/// Equal to tau(n) for every n; the equality is a verification target, not
/// an assumption.
Rational recurrence_f(int n);

/// F(1)..F(n_max); index 0 is unused padding.
std::vector<Rational> recurrence_f_table(int n_max);

/// Expected randomized-greedy cost with k zero-cost pairs among n points:
///   F(k, n) = (1 - k/n) + (1 - k/n)^2 F(k, n-1) + (k/n)(2 - k/n) F(k-1, n-1)
/// with F(0, 1) = 1, F(1, 1) = 0, and F(n, n) = 0 taken as a terminating
/// case before the recurrence applies. Preconditions 0 <= k <= n, n >= 1.
Rational recurrence_fkn(int k, int n);

/// Advances one dynamic-programming row: given F(., n-1) (size n) returns
/// F(., n) (size n+1). fkn_base_row() is the n = 1 row {1, 0}.
/// Exposed so verification can run row sweeps (and tests can run perturbed
/// variants through the same checks).
std::vector<Rational> fkn_next_row(int n, const std::vector<Rational>& prev);
std::vector<Rational> fkn_base_row();

/// n^2 * n!: the counting bound on deterministic online algorithms used to
/// justify sampling in the lower-bound evaluator. Exact at any n.
Integer count_deterministic_bound(int n);

}  // namespace ombm
