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

#include "ombm/policies.hpp"

#include <string>

#include "ombm/errors.hpp"
#include "ombm/greedy.hpp"

namespace ombm {

namespace {

void require_order_size(const Instance& instance, const ArrivalOrder& order) {
  if (order.size() != instance.n()) {
    throw InvalidParameterError("arrival order has size " +
                                std::to_string(order.size()) +
                                "; instance has n=" +
                                std::to_string(instance.n()));
  }
}

template <class Choose>
RunOutcome run_online(const Instance& instance, const ArrivalOrder& order,
                      Choose&& choose) {
  const int n = instance.n();
  RunOutcome outcome;
  outcome.assignment.assign(static_cast<std::size_t>(n), -1);
  outcome.step_costs.reserve(static_cast<std::size_t>(n));
  outcome.total_cost = 0;
  FreeSet free_set(n);
  for (int t = 0; t < n; ++t) {
    const int j = order.at(t);
    const int i = choose(free_set, j);
    free_set.remove(i);
    outcome.assignment[static_cast<std::size_t>(j)] = i;
    const Rational& c = instance.cost(i, j);
    outcome.step_costs.push_back(c);
    outcome.total_cost += c;
  }
  return outcome;
}

}  // namespace

RunOutcome run_rg(const Instance& instance, const ArrivalOrder& order,
                  Rng& rng) {
  require_order_size(instance, order);
  GreedyScratch scratch;
  return run_online(instance, order, [&](const FreeSet& free_set, int j) {
    bool zero = false;
    return rg_choose(instance, free_set, j, rng, scratch, &zero);
  });
}

RunOutcome run_dg(const Instance& instance, const ArrivalOrder& order,
                  const PreferenceMatrix& prefs) {
  require_order_size(instance, order);
  if (prefs.n() != instance.n()) {
    throw InvalidParameterError("preference matrix size " +
                                std::to_string(prefs.n()) +
                                " does not match instance size " +
                                std::to_string(instance.n()));
  }
  return run_online(instance, order, [&](const FreeSet& free_set, int j) {
    bool zero = false;
    return dg_choose(instance, free_set, j, prefs.row(j), &zero);
  });
}

}  // namespace ombm
