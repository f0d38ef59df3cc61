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
#include "ombm/recurrence.hpp"
#include "ombm/verify.hpp"

using namespace ombm;

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(3) == make_ratio(11, 6));
  CHECK(std::abs(to_double(harmonic(100)) - (std::log(100.0) + 0.5772)) < 0.01);
  CHECK_THROWS_AS(harmonic(0), InvalidParameterError);

  const auto table = harmonic_table(50);
  for (int n = 1; n <= 50; ++n) {
    CHECK(table[static_cast<std::size_t>(n)] == harmonic(n));
  }
}

TEST_CASE("tau closed form") {
  CHECK(tau(1) == 1);
  CHECK(tau(2) == make_ratio(5, 4));
  // tau(n) = (1+1/n) sum_{t=1..n} 1/(t+1): the same value by the series form.
  for (int n = 1; n <= 40; ++n) {
    Rational series(0);
    for (int t = 1; t <= n; ++t) series += make_ratio(1, t + 1);
    CHECK(tau(n) == make_ratio(n + 1, n) * series);
  }
  CHECK(tau(50) == recurrence_f(50));
  CHECK_THROWS_AS(tau(0), InvalidParameterError);
}

TEST_CASE("recurrence_f equals tau on a long range") {
  CHECK(recurrence_f(1) == 1);
  CHECK(recurrence_f(2) == make_ratio(5, 4));
  const auto f = recurrence_f_table(200);
  const auto taus = tau_table(200);
  for (int n = 1; n <= 200; ++n) {
    CHECK(f[static_cast<std::size_t>(n)] == taus[static_cast<std::size_t>(n)]);
  }
  CHECK_THROWS_AS(recurrence_f(0), InvalidParameterError);
}

TEST_CASE("recurrence_fkn base cases and small values") {
  CHECK(recurrence_fkn(0, 1) == 1);
  CHECK(recurrence_fkn(1, 1) == 0);
  // F(1,2) = 1/2 + (1/4) F(1,1) + (3/4) F(0,1)
  CHECK(recurrence_fkn(1, 2) == make_ratio(5, 4));
  CHECK(recurrence_fkn(2, 3) == make_ratio(13, 9));
  for (int n = 1; n <= 40; ++n) {
    CHECK(recurrence_fkn(0, n) == n);
    CHECK(recurrence_fkn(n, n) == 0);
  }
  CHECK_THROWS_AS(recurrence_fkn(3, 2), InvalidParameterError);
  CHECK_THROWS_AS(recurrence_fkn(-1, 2), InvalidParameterError);
  CHECK_THROWS_AS(recurrence_fkn(0, 0), InvalidParameterError);
}

TEST_CASE("fkn bound and its equality pattern") {
  const auto taus = tau_table(120);
  std::vector<Rational> row;
  for (int n = 1; n <= 120; ++n) {
    row = fkn_next_row(n, row);
    const Rational& tau_n = taus[static_cast<std::size_t>(n)];
    for (int k = 0; k <= n; ++k) {
      CHECK(row[static_cast<std::size_t>(k)] <= (n - k) * tau_n);
    }
    CHECK(row[static_cast<std::size_t>(n) - 1] == tau_n);
  }
}

TEST_CASE("count_deterministic_bound") {
  CHECK(count_deterministic_bound(1) == 1);
  CHECK(count_deterministic_bound(2) == 8);
  CHECK(count_deterministic_bound(3) == 54);
  Integer expected(1);
  for (int k = 2; k <= 25; ++k) expected *= k;
  expected *= 25 * 25;
  CHECK(count_deterministic_bound(25) == expected);
  CHECK_THROWS_AS(count_deterministic_bound(0), InvalidParameterError);
}

TEST_CASE("tau stays within the loose harmonic envelope") {
  for (int n : {10, 100, 500}) {
    const Rational h_next = harmonic(n + 1);
    const Rational gap = tau(n) - h_next;
    const Rational bound = h_next / n + 1;
    CHECK(gap <= bound);
    CHECK(-gap <= bound);
  }
}

TEST_CASE("verification suite passes on the real recurrence") {
  VerifyOptions options;
  options.f_n_max = 120;
  options.fkn_n_max = 80;
  options.engine_n_max = 6;
  for (const CheckResult& check : run_verification(options)) {
    CAPTURE(check.name);
    CAPTURE(check.detail);
    CHECK(check.pass);
  }
}

TEST_CASE("perturbing the B coefficient trips the checks") {
  // (k/n)(2 - k/n) becomes (k/n)(1 - k/n): the equality at k = n-1 breaks
  // immediately even though the upper bound still holds.
  const FknRowStep mutated = [](int n, const std::vector<Rational>& prev) {
    if (n == 1) return fkn_base_row();
    std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
    row[static_cast<std::size_t>(n)] = 0;
    for (int k = 0; k < n; ++k) {
      const Rational miss = Rational(1) - make_ratio(k, n);
      Rational value = miss + miss * miss * prev[static_cast<std::size_t>(k)];
      if (k > 0) {
        value += make_ratio(k, n) * (Rational(1) - make_ratio(k, n)) *
                 prev[static_cast<std::size_t>(k) - 1];
      }
      row[static_cast<std::size_t>(k)] = std::move(value);
    }
    return row;
  };
  const auto checks = check_fkn_rows(40, mutated);
  bool any_failed = false;
  bool equality_failed = false;
  for (const CheckResult& check : checks) {
    if (!check.pass) {
      any_failed = true;
      if (check.name.find("F(n-1,n)") != std::string::npos) {
        equality_failed = true;
      }
    }
  }
  CHECK(any_failed);
  CHECK(equality_failed);

  // The genuine recurrence passes the identical checks.
  for (const CheckResult& check : check_fkn_rows(40, fkn_next_row)) {
    CHECK(check.pass);
  }
}
