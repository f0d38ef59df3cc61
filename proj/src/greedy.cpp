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

#include "ombm/greedy.hpp"

#include <bit>
#include <cassert>

namespace ombm {

void FreeSet::reset(int n) {
  n_ = n;
  size_ = n;
  free_.assign(static_cast<std::size_t>(n), 1);
  tree_.assign(static_cast<std::size_t>(n) + 1, 0);
  // With every vertex present, each Fenwick node covers exactly its span.
  for (int i = 1; i <= n_; ++i) tree_[static_cast<std::size_t>(i)] = i & -i;
}

void FreeSet::remove(int i) {
  assert(contains(i));
  free_[static_cast<std::size_t>(i)] = 0;
  --size_;
  for (int x = i + 1; x <= n_; x += x & -x) {
    --tree_[static_cast<std::size_t>(x)];
  }
}

int FreeSet::kth(int k) const {
  assert(k >= 0 && k < size_);
  int pos = 0;
  int remaining = k + 1;
  for (int step = std::bit_floor(static_cast<unsigned>(n_)); step > 0;
       step >>= 1) {
    const int next = pos + step;
    if (next <= n_ && tree_[static_cast<std::size_t>(next)] < remaining) {
      pos = next;
      remaining -= tree_[static_cast<std::size_t>(pos)];
    }
  }
  return pos;  // item index of Fenwick position pos + 1
}

namespace {

int draw_sorted(const std::vector<int>& candidates, Rng& rng) {
  if (candidates.size() == 1) return candidates[0];
  return candidates[static_cast<std::size_t>(
      rng.below(candidates.size()))];
}

}  // namespace

int rg_choose(const Instance& instance, const FreeSet& free_set, int arrival,
              Rng& rng, GreedyScratch& scratch, bool* zero_cost) {
  assert(free_set.size() > 0);
  auto& argmin = scratch.argmin;
  argmin.clear();
  // Entries are >= 0, so a free zero neighbor is always the global minimum.
  for (int i : instance.zero_neighbors(arrival)) {
    if (free_set.contains(i)) argmin.push_back(i);
  }
  if (!argmin.empty()) {
    *zero_cost = true;
    return draw_sorted(argmin, rng);
  }
  if (instance.is_uniform()) {
    // Every free vertex costs one; the argmin set is the whole free set.
    *zero_cost = false;
    const int m = free_set.size();
    return free_set.kth(m == 1 ? 0 : static_cast<int>(rng.below(
                                         static_cast<std::uint64_t>(m))));
  }
  const Rational* best = nullptr;
  for (int i = 0; i < instance.n(); ++i) {
    if (!free_set.contains(i)) continue;
    const Rational& c = instance.cost(i, arrival);
    if (best == nullptr || c < *best) {
      best = &c;
      argmin.clear();
      argmin.push_back(i);
    } else if (c == *best) {
      argmin.push_back(i);
    }
  }
  *zero_cost = false;  // a zero minimum was handled above
  return draw_sorted(argmin, rng);
}

int dg_choose(const Instance& instance, const FreeSet& free_set, int arrival,
              std::span<const int> pref_row, bool* zero_cost) {
  assert(free_set.size() > 0);
  if (instance.is_uniform()) {
    bool has_zero = false;
    for (int i : instance.zero_neighbors(arrival)) {
      if (free_set.contains(i)) {
        has_zero = true;
        break;
      }
    }
    *zero_cost = has_zero;
    for (int i : pref_row) {
      if (!free_set.contains(i)) continue;
      if (!has_zero || instance.zero_edge(i, arrival)) return i;
    }
  } else {
    const Rational* best = nullptr;
    for (int i = 0; i < instance.n(); ++i) {
      if (!free_set.contains(i)) continue;
      const Rational& c = instance.cost(i, arrival);
      if (best == nullptr || c < *best) best = &c;
    }
    for (int i : pref_row) {
      if (free_set.contains(i) && instance.cost(i, arrival) == *best) {
        *zero_cost = (*best == 0);
        return i;
      }
    }
  }
  assert(false && "no free vertex");
  return -1;
}

}  // namespace ombm
