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

#include <cmath>

#include "ombm/errors.hpp"
#include "ombm/harmonic.hpp"
#include "ombm/rng.hpp"
#include "ombm/yao.hpp"

using namespace ombm;

TEST_CASE("single point always pays the unit edge") {
  const YaoResult result =
      yao_expected_cost(1, PreferenceMatrix::identity(1), YaoMode::exhaustive());
  CHECK(result.exact);
  CHECK(result.samples == 1);
  CHECK(result.expected_cost == 1);
  CHECK(tau(1) == 1);
}

TEST_CASE("n = 2: every matrix averages exactly 5/4 over the family") {
  const auto matrices = enumerate_preference_matrices(2);
  REQUIRE(matrices.size() == 4);
  for (const auto& prefs : matrices) {
    const YaoResult result = yao_expected_cost(2, prefs, YaoMode::exhaustive());
    CHECK(result.samples == 4);
    CHECK(result.expected_cost >= make_ratio(5, 4));
    CHECK(result.expected_cost == make_ratio(5, 4));
  }
}

TEST_CASE("n = 3: all 216 matrices meet the bound with margin exactly zero") {
  const auto matrices = enumerate_preference_matrices(3);
  REQUIRE(matrices.size() == 216);
  const Rational tau3 = tau(3);
  bool margin_zero_attained = false;
  for (const auto& prefs : matrices) {
    const YaoResult result = yao_expected_cost(3, prefs, YaoMode::exhaustive());
    CHECK(result.expected_cost >= tau3);
    if (result.expected_cost == tau3) margin_zero_attained = true;
  }
  CHECK(margin_zero_attained);
}

TEST_CASE("n = 4 identity matrix evaluates to tau(4) exactly") {
  const YaoResult result =
      yao_expected_cost(4, PreferenceMatrix::identity(4), YaoMode::exhaustive());
  CHECK(result.samples == 576);
  CHECK(result.expected_cost >= tau(4));
  CHECK(result.expected_cost == tau(4));
}

TEST_CASE("sampled mode is deterministic and close to the exact value") {
  const PreferenceMatrix prefs = PreferenceMatrix::identity(4);
  const YaoResult a = yao_expected_cost(4, prefs, YaoMode::sampled(5000, 9));
  const YaoResult b = yao_expected_cost(4, prefs, YaoMode::sampled(5000, 9));
  CHECK(a.expected_cost == b.expected_cost);
  CHECK_FALSE(a.exact);
  CHECK(a.samples == 5000);
  const double error =
      to_double(a.expected_cost) - to_double(tau(4));
  CHECK(std::abs(error) <= a.hoeffding_half_width);

  const YaoResult other = yao_expected_cost(4, prefs, YaoMode::sampled(5000, 10));
  CHECK(other.expected_cost != a.expected_cost);
}

TEST_CASE("sampled margins at n = 5 stay above the Hoeffding allowance") {
  Rng rng(77);
  for (int m = 0; m < 25; ++m) {
    const PreferenceMatrix prefs = PreferenceMatrix::sampled(5, rng);
    const YaoResult result =
        yao_expected_cost(5, prefs, YaoMode::sampled(10000, 1000 + m));
    const double margin = to_double(result.expected_cost) - to_double(tau(5));
    CHECK(margin >= -result.hoeffding_half_width);
  }
}

TEST_CASE("caps and argument checks") {
  CHECK_THROWS_AS(yao_expected_cost(7, PreferenceMatrix::identity(7),
                                    YaoMode::exhaustive()),
                  ResourceLimitError);
  CHECK_THROWS_AS(enumerate_preference_matrices(4), ResourceLimitError);
  CHECK_THROWS_AS(yao_expected_cost(3, PreferenceMatrix::identity(2),
                                    YaoMode::exhaustive()),
                  InvalidParameterError);
  CHECK_THROWS_AS(yao_expected_cost(3, PreferenceMatrix::identity(3),
                                    YaoMode::sampled(0, 1)),
                  InvalidParameterError);
  CHECK(all_permutations(3).size() == 6);
}
