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

#include <span>
#include <vector>

#include "ombm/instance.hpp"
#include "ombm/rng.hpp"

namespace ombm {

/// Unmatched L-vertices with O(log n) rank selection: random tie-breaks are
/// drawn against the free set sorted by L-index, so the sampled distribution
/// does not depend on any container layout.
class FreeSet {
 public:
  explicit FreeSet(int n) { reset(n); }

  void reset(int n);
  int size() const noexcept { return size_; }
  bool contains(int i) const noexcept {
    return free_[static_cast<std::size_t>(i)] != 0;
  }
  void remove(int i);
  /// k-th smallest free index, 0-based, k < size().
  int kth(int k) const;

 private:
  int n_ = 0;
  int size_ = 0;
  std::vector<char> free_;
  std::vector<int> tree_;  // Fenwick tree over membership, 1-based
};

/// Scratch buffers shared across arrivals to keep the run loop allocation
/// free.
struct GreedyScratch {
  std::vector<int> argmin;
};

/// One randomized-greedy step for arrival j: uniform draw over the free
/// argmin set (ascending by L-index). Randomness is consumed only when the
/// choice is a real tie. Sets zero_cost to whether the matched edge costs 0.
int rg_choose(const Instance& instance, const FreeSet& free_set, int arrival,
              Rng& rng, GreedyScratch& scratch, bool* zero_cost);

/// One deterministic-greedy step: first free vertex in the preference row
/// achieving the minimum available cost.
int dg_choose(const Instance& instance, const FreeSet& free_set, int arrival,
              std::span<const int> pref_row, bool* zero_cost);

}  // namespace ombm
