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

#include "ombm/engine.hpp"

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>

#include "ombm/errors.hpp"

namespace ombm {

namespace {

constexpr int kHardCap = 26;  // two subset masks must pack into one key

using Mask = std::uint32_t;

struct EngineState {
  const Instance& instance;
  const ArrivalModel& model;
  int n;
  std::unordered_map<std::uint64_t, Rational> memo;

  // Expected cost of finishing the run from this state.
  const Rational& expected(Mask free_mask, Mask remaining) {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(free_mask) << kHardCap) | remaining;
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    Rational value(0);
    if (remaining != 0) {
      if (model.is_random_order()) {
        // Uniform over which remaining vertex arrives next.
        for (Mask rest = remaining; rest != 0; rest &= rest - 1) {
          const int j = std::countr_zero(rest);
          value += step(j, free_mask, remaining);
        }
        value /= std::popcount(remaining);
      } else {
        const int t = n - std::popcount(remaining);
        value = step(model.fixed_order().at(t), free_mask, remaining);
      }
    }
    return memo.emplace(key, std::move(value)).first->second;
  }

  // Arrival j at the given state: exact minimum cost plus the tie average
  // over the free argmin set.
  Rational step(int j, Mask free_mask, Mask remaining) {
    std::array<int, kHardCap> argmin{};
    int count = 0;
    Rational min_cost;
    for (int i : instance.zero_neighbors(j)) {
      if (free_mask & (Mask{1} << i)) argmin[static_cast<std::size_t>(count++)] = i;
    }
    if (count > 0) {
      min_cost = 0;
    } else if (instance.is_uniform()) {
      min_cost = 1;
      for (Mask rest = free_mask; rest != 0; rest &= rest - 1) {
        argmin[static_cast<std::size_t>(count++)] = std::countr_zero(rest);
      }
    } else {
      for (Mask rest = free_mask; rest != 0; rest &= rest - 1) {
        const int i = std::countr_zero(rest);
        const Rational& c = instance.cost(i, j);
        if (count == 0 || c < min_cost) {
          min_cost = c;
          count = 0;
          argmin[static_cast<std::size_t>(count++)] = i;
        } else if (c == min_cost) {
          argmin[static_cast<std::size_t>(count++)] = i;
        }
      }
    }

    Rational continuation(0);
    const Mask next_remaining = remaining & ~(Mask{1} << j);
    for (int c = 0; c < count; ++c) {
      const int i = argmin[static_cast<std::size_t>(c)];
      continuation += expected(free_mask & ~(Mask{1} << i), next_remaining);
    }
    return min_cost + continuation / count;
  }
};

}  // namespace

Rational exact_expected_cost(const Instance& instance,
                             const ArrivalModel& model,
                             const EngineOptions& options) {
  const int n = instance.n();
  const int cap = options.cap < kHardCap ? options.cap : kHardCap;
  if (n > cap) {
    throw ResourceLimitError("exact expectation capped at n <= " +
                             std::to_string(cap) + "; got n=" +
                             std::to_string(n));
  }
  if (!model.is_random_order() && model.fixed_order().size() != n) {
    throw InvalidParameterError("fixed arrival order has size " +
                                std::to_string(model.fixed_order().size()) +
                                "; instance has n=" + std::to_string(n));
  }
  EngineState state{instance, model, n, {}};
  const Mask full = (Mask{1} << n) - 1;
  return state.expected(full, full);
}

}  // namespace ombm
