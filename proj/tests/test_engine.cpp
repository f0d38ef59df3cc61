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

#include "ombm/engine.hpp"
#include "ombm/errors.hpp"
#include "ombm/harmonic.hpp"
#include "ombm/instance.hpp"
#include "ombm/recurrence.hpp"
#include "oracle_helpers.hpp"

using namespace ombm;

TEST_CASE("example1(2) under random order, against the hand enumeration") {
  // Order (v0, v1) is fully forced and costs 1; order (v1, v0) leaves v1 a
  // uniform pick between u0 and u1, costing (2 + 1) / 2.
  const Rational hand = (Rational(1) + make_ratio(3, 2)) / 2;
  CHECK(hand == make_ratio(5, 4));
  CHECK(exact_expected_cost(make_example1(2), ArrivalModel::random_order()) ==
        hand);
}

TEST_CASE("example1(n) expectation equals tau(n)") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(exact_expected_cost(make_example1(n), ArrivalModel::random_order()) ==
          tau(n));
  }
}

TEST_CASE("uniform_k(n, n) costs zero under either model") {
  for (int n = 1; n <= 6; ++n) {
    const Instance instance = make_uniform_k(n, n);
    CHECK(exact_expected_cost(instance, ArrivalModel::random_order()) == 0);
    CHECK(exact_expected_cost(
              instance, ArrivalModel::fixed(ArrivalOrder::last_first(n))) == 0);
  }
}

TEST_CASE("engine reproduces the F(k, n) recurrence") {
  std::vector<Rational> row;
  for (int n = 1; n <= 7; ++n) {
    row = fkn_next_row(n, row);
    for (int k = 0; k <= n; ++k) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(exact_expected_cost(make_uniform_k(n, k),
                                ArrivalModel::random_order()) ==
            row[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("fixed-order engine matches direct choice-tree recursion") {
  Rng rng(404);
  for (int round = 0; round < 60; ++round) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const Instance instance = (round % 2 == 0)
                                  ? oracle::random_uniform_instance(rng, n, 40)
                                  : oracle::random_general_instance(rng, n, 3, 2);
    const std::vector<int> order = random_permutation(n, rng);
    CAPTURE(round);
    CHECK(exact_expected_cost(instance,
                              ArrivalModel::fixed(ArrivalOrder(order))) ==
          oracle::rg_expected_cost_fixed_order(instance, order));
  }
}

TEST_CASE("random order equals the average over all fixed orders") {
  Rng rng(505);
  for (int round = 0; round < 25; ++round) {
    const int n = 1 + static_cast<int>(rng.below(5));
    const Instance instance = (round % 2 == 0)
                                  ? oracle::random_uniform_instance(rng, n, 40)
                                  : oracle::random_general_instance(rng, n, 3, 2);
    CAPTURE(round);
    CHECK(exact_expected_cost(instance, ArrivalModel::random_order()) ==
          oracle::rg_expected_cost_random_order(instance));
  }
}

TEST_CASE("example1 under the identity order is forced to cost 1") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(exact_expected_cost(
              make_example1(n),
              ArrivalModel::fixed(ArrivalOrder::identity(n))) == 1);
  }
}

TEST_CASE("engine caps and argument checks") {
  CHECK_THROWS_AS(exact_expected_cost(make_example1(13),
                                      ArrivalModel::random_order()),
                  ResourceLimitError);
  EngineOptions small;
  small.cap = 5;
  CHECK_THROWS_AS(exact_expected_cost(make_example1(6),
                                      ArrivalModel::random_order(), small),
                  ResourceLimitError);
  CHECK_THROWS_AS(
      exact_expected_cost(make_example1(3),
                          ArrivalModel::fixed(ArrivalOrder::identity(2))),
      InvalidParameterError);
  // Raising the cap admits the same n that the default rejects.
  EngineOptions wide;
  wide.cap = 13;
  CHECK(exact_expected_cost(make_uniform_k(13, 13),
                            ArrivalModel::random_order(), wide) == 0);
}
