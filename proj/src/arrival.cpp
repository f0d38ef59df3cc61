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

#include "ombm/arrival.hpp"

#include <string>

#include "ombm/errors.hpp"
#include "ombm/instance.hpp"

namespace ombm {

ArrivalOrder::ArrivalOrder(std::vector<int> sequence)
    : sequence_(std::move(sequence)) {
  if (sequence_.empty() || !is_permutation(sequence_)) {
    throw InvalidParameterError(
        "arrival order must be a non-empty permutation of {0, ..., n-1}");
  }
}

ArrivalOrder ArrivalOrder::identity(int n) {
  std::vector<int> sequence(static_cast<std::size_t>(n));
  for (int t = 0; t < n; ++t) sequence[static_cast<std::size_t>(t)] = t;
  return ArrivalOrder(std::move(sequence));
}

ArrivalOrder ArrivalOrder::last_first(int n) {
  std::vector<int> sequence;
  sequence.reserve(static_cast<std::size_t>(n));
  sequence.push_back(n - 1);
  for (int t = 0; t + 1 < n; ++t) sequence.push_back(t);
  return ArrivalOrder(std::move(sequence));
}

ArrivalOrder ArrivalOrder::sampled(int n, Rng& rng) {
  return ArrivalOrder(random_permutation(n, rng));
}

}  // namespace ombm
