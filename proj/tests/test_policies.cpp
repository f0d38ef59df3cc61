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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "ombm/errors.hpp"
#include "ombm/greedy.hpp"
#include "ombm/instance.hpp"
#include "ombm/offline.hpp"
#include "ombm/policies.hpp"
#include "ombm/yao.hpp"
#include "oracle_helpers.hpp"

using namespace ombm;

TEST_CASE("FreeSet rank selection tracks a naive sorted model") {
  Rng rng(61);
  for (int round = 0; round < 30; ++round) {
    const int n = 1 + static_cast<int>(rng.below(40));
    FreeSet set(n);
    std::vector<int> model(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) model[static_cast<std::size_t>(i)] = i;
    while (!model.empty()) {
      REQUIRE(set.size() == static_cast<int>(model.size()));
      for (std::size_t k = 0; k < model.size(); ++k) {
        CHECK(set.kth(static_cast<int>(k)) == model[k]);
      }
      const std::size_t victim = rng.below(model.size());
      const int removed = model[victim];
      CHECK(set.contains(removed));
      set.remove(removed);
      CHECK_FALSE(set.contains(removed));
      model.erase(model.begin() + static_cast<std::ptrdiff_t>(victim));
    }
    CHECK(set.size() == 0);
  }
}

namespace {

void check_outcome_invariants(const Instance& instance,
                              const RunOutcome& outcome) {
  REQUIRE(is_permutation(outcome.assignment));
  Rational total(0);
  for (const Rational& c : outcome.step_costs) total += c;
  CHECK(outcome.total_cost == total);
  Rational by_assignment(0);
  for (int j = 0; j < instance.n(); ++j) {
    by_assignment +=
        instance.cost(outcome.assignment[static_cast<std::size_t>(j)], j);
  }
  CHECK(outcome.total_cost == by_assignment);
}

}  // namespace

TEST_CASE("run_rg on hand-checked small cases") {
  for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
    Rng rng(seed);
    const RunOutcome two =
        run_rg(make_example1(2), ArrivalOrder::identity(2), rng);
    CHECK(two.total_cost == 1);
    CHECK(two.assignment == std::vector<int>{0, 1});

    Rng rng1(seed);
    CHECK(run_rg(make_example1(1), ArrivalOrder::identity(1), rng1).total_cost ==
          1);

    Rng rng2(seed);
    const ArrivalOrder order = ArrivalOrder::sampled(3, rng2);
    CHECK(run_rg(make_uniform_k(3, 3), order, rng2).total_cost == 0);
  }
}

TEST_CASE("run_dg on hand-checked small cases") {
  const PreferenceMatrix identity2 = PreferenceMatrix::identity(2);
  CHECK(run_dg(make_example1(2), ArrivalOrder::identity(2), identity2)
            .total_cost == 1);

  // v_2 arrives first, takes u_0, and every later arrival is displaced by
  // one: the cascade behind the CR(DG) = n witness.
  const RunOutcome cascade =
      run_dg(make_example1(3), ArrivalOrder({2, 0, 1}),
             PreferenceMatrix::identity(3));
  CHECK(cascade.total_cost == 3);
  CHECK(cascade.assignment == std::vector<int>{1, 2, 0});

  const PreferenceMatrix reversed({{1, 0}, {1, 0}});
  CHECK(run_dg(make_uniform_k(2, 0), ArrivalOrder::identity(2), reversed)
            .total_cost == 2);
}

TEST_CASE("dg witness: identity prefs, last-first order costs exactly n") {
  for (int n = 1; n <= 50; ++n) {
    const RunOutcome outcome =
        run_dg(make_example1(n), ArrivalOrder::last_first(n),
               PreferenceMatrix::identity(n));
    CHECK(outcome.total_cost == n);
  }
}

TEST_CASE("outcomes are perfect matchings costing at least OPT") {
  Rng rng(21);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng.below(7));
    const Instance instance = (round % 2 == 0)
                                  ? oracle::random_uniform_instance(rng, n)
                                  : oracle::random_general_instance(rng, n);
    const ArrivalOrder order = ArrivalOrder::sampled(n, rng);
    const Rational opt = optimal_cost(instance);

    const RunOutcome rg = run_rg(instance, order, rng);
    check_outcome_invariants(instance, rg);
    CHECK(rg.total_cost >= opt);

    const RunOutcome dg =
        run_dg(instance, order, PreferenceMatrix::sampled(n, rng));
    check_outcome_invariants(instance, dg);
    CHECK(dg.total_cost >= opt);
  }
}

TEST_CASE("run_rg replays bit-for-bit from the same seed") {
  Rng setup(33);
  for (int round = 0; round < 20; ++round) {
    const int n = 2 + static_cast<int>(setup.below(7));
    const Instance instance = oracle::random_uniform_instance(setup, n, 40);
    const ArrivalOrder order = ArrivalOrder::sampled(n, setup);
    const std::uint64_t seed = setup.next();
    Rng first(seed);
    Rng second(seed);
    const RunOutcome a = run_rg(instance, order, first);
    const RunOutcome b = run_rg(instance, order, second);
    CHECK(a.assignment == b.assignment);
    CHECK(a.total_cost == b.total_cost);
  }
}

TEST_CASE("zero-cost perfect matching is always found on uniform_k(n, n)") {
  Rng rng(5);
  for (int n = 1; n <= 8; ++n) {
    const Instance instance = make_uniform_k(n, n);
    for (int round = 0; round < 10; ++round) {
      const ArrivalOrder order = ArrivalOrder::sampled(n, rng);
      CHECK(run_rg(instance, order, rng).total_cost == 0);
      CHECK(run_dg(instance, order, PreferenceMatrix::sampled(n, rng))
                .total_cost == 0);
    }
  }
}

TEST_CASE("identity arrivals on example1 make every step forced") {
  // Each v_j finds its own partner free, so RG never consumes a tie draw
  // and the outcome is the same under every seed.
  for (int n = 1; n <= 12; ++n) {
    std::vector<int> baseline;
    for (std::uint64_t seed : {7ULL, 99ULL, 123456ULL}) {
      Rng rng(seed);
      const RunOutcome outcome =
          run_rg(make_example1(n), ArrivalOrder::identity(n), rng);
      CHECK(outcome.total_cost == 1);
      if (baseline.empty()) {
        baseline = outcome.assignment;
      } else {
        CHECK(outcome.assignment == baseline);
      }
    }
  }
}

TEST_CASE("zero-first canonicalization never hurts dg on family instances") {
  // Exhaustive over pi, sigma and all matrices for n <= 3; sampled matrices
  // at n = 4. run_dg is greedy, so equality is expected throughout.
  for (int n = 2; n <= 3; ++n) {
    const auto perms = all_permutations(n);
    const auto matrices = enumerate_preference_matrices(n);
    for (const auto& pi : perms) {
      const Instance instance = make_family_instance(n, pi);
      for (const auto& sigma : perms) {
        const ArrivalOrder order(sigma);
        for (const auto& prefs : matrices) {
          const Rational raw = run_dg(instance, order, prefs).total_cost;
          const Rational canonical =
              run_dg(instance, order, canonicalize_zero_first(prefs, instance))
                  .total_cost;
          CHECK(canonical <= raw);
          CHECK(canonical == raw);
        }
      }
    }
  }
  Rng rng(17);
  const auto perms4 = all_permutations(4);
  for (int round = 0; round < 40; ++round) {
    const PreferenceMatrix prefs = PreferenceMatrix::sampled(4, rng);
    for (const auto& pi : perms4) {
      const Instance instance = make_family_instance(4, pi);
      for (const auto& sigma : perms4) {
        const ArrivalOrder order(sigma);
        CHECK(run_dg(instance, order, canonicalize_zero_first(prefs, instance))
                  .total_cost <= run_dg(instance, order, prefs).total_cost);
      }
    }
  }
}

TEST_CASE("zero_first_family_cost agrees with run_dg on family instances") {
  Rng rng(29);
  for (int round = 0; round < 200; ++round) {
    const int n = 1 + static_cast<int>(rng.below(6));
    const std::vector<int> pi = random_permutation(n, rng);
    const std::vector<int> sigma = random_permutation(n, rng);
    const PreferenceMatrix prefs = PreferenceMatrix::sampled(n, rng);
    const Rational via_dg =
        run_dg(make_family_instance(n, pi), ArrivalOrder(sigma), prefs)
            .total_cost;
    CHECK(Rational(zero_first_family_cost(n, pi, sigma, prefs)) == via_dg);
  }
}

TEST_CASE("policy argument validation") {
  Rng rng(1);
  CHECK_THROWS_AS(
      run_rg(make_example1(3), ArrivalOrder::identity(2), rng),
      InvalidParameterError);
  CHECK_THROWS_AS(run_dg(make_example1(3), ArrivalOrder::identity(3),
                         PreferenceMatrix::identity(2)),
                  InvalidParameterError);
}
