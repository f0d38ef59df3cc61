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

/// H_n = sum_{k=1..n} 1/k, exact. n >= 1.
Rational harmonic(int n);

/// H_0..H_{n_max} as exact rationals.
std::vector<Rational> harmonic_table(int n_max);

/// tau(n) = (1 + 1/n)(H_{n+1} - 1): the tight competitive ratio of
/// randomized greedy under the uniform metric with random-order arrivals.
/// n >= 1.
Rational tau(int n);

/// tau(1)..tau(n_max); index 0 is unused padding so tau_values[n] = tau(n).
std::vector<Rational> tau_table(int n_max);

}  // namespace ombm
