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
#include <vector>

#include "ombm/engine.hpp"
#include "ombm/errors.hpp"
#include "ombm/harmonic.hpp"
#include "ombm/instance.hpp"
#include "ombm/montecarlo.hpp"
#include "ombm/rng.hpp"
#include "ombm/stats.hpp"

using namespace ombm;

namespace {

bool same_report(const EstimateReport& a, const EstimateReport& b) {
  return a.trials == b.trials && a.mean == b.mean &&
         a.ci_half_width == b.ci_half_width && a.ci_method == b.ci_method &&
         a.opt_cost == b.opt_cost &&
         ((std::isnan(a.ratio_estimate) && std::isnan(b.ratio_estimate)) ||
          a.ratio_estimate == b.ratio_estimate) &&
         a.tau_reference == b.tau_reference;
}

}  // namespace

TEST_CASE("bounded draws stay in range and cover every residue") {
  Rng rng(1);
  for (std::uint64_t bound : {1ULL, 2ULL, 7ULL, 100ULL}) {
    std::vector<int> counts(bound, 0);
    for (int draw = 0; draw < 20000; ++draw) {
      const std::uint64_t value = rng.below(bound);
      REQUIRE(value < bound);
      ++counts[static_cast<std::size_t>(value)];
    }
    // Each residue of a fair 20000-draw sample stays near 20000/bound.
    const double expected = 20000.0 / static_cast<double>(bound);
    for (int count : counts) {
      CHECK(std::abs(count - expected) < 6.0 * std::sqrt(expected) + 1.0);
    }
  }
}

TEST_CASE("substreams are deterministic and distinct") {
  Rng a = Rng::substream(42, 0);
  Rng b = Rng::substream(42, 0);
  Rng c = Rng::substream(42, 1);
  Rng d = Rng::substream(43, 0);
  const std::uint64_t first = a.next();
  CHECK(first == b.next());
  CHECK(first != c.next());
  CHECK(first != d.next());
}

TEST_CASE("random permutations are exactly uniform on three elements") {
  // 6 cells, 60000 draws: each cell expects 10000 with sigma ~ 91.
  Rng rng(5);
  std::vector<int> counts(6, 0);
  for (int draw = 0; draw < 60000; ++draw) {
    const std::vector<int> perm = random_permutation(3, rng);
    const int index = perm[0] * 2 + (perm[1] > perm[2] ? 1 : 0);
    ++counts[static_cast<std::size_t>(index)];
  }
  for (int count : counts) {
    CHECK(std::abs(count - 10000) < 550);
  }
}

TEST_CASE("kahan summation recovers what naive addition loses") {
  KahanSum sum;
  sum.add(1e16);
  for (int i = 0; i < 10000; ++i) sum.add(1.0);
  sum.add(-1e16);
  CHECK(sum.value() == 10000.0);
}

TEST_CASE("degenerate plans have exact means and zero width") {
  TrialPlan plan;
  plan.trials = 100;
  plan.master_seed = 5;
  const EstimateReport one = run_trials(make_example1(1), plan);
  CHECK(one.mean == 1.0);
  CHECK(one.ci_half_width == 0.0);
  CHECK(one.opt_cost == 1);
  CHECK(one.ratio_estimate == 1.0);

  plan.trials = 1000;
  const EstimateReport zero = run_trials(make_uniform_k(5, 5), plan);
  CHECK(zero.mean == 0.0);
  CHECK(zero.ci_half_width == 0.0);
  CHECK(zero.opt_cost == 0);
  CHECK(std::isnan(zero.ratio_estimate));
}

TEST_CASE("rg estimate brackets the exact expectation") {
  TrialPlan plan;
  plan.trials = 100000;
  plan.master_seed = 7;
  const EstimateReport report = run_trials(make_example1(8), plan);
  const double exact = to_double(
      exact_expected_cost(make_example1(8), ArrivalModel::random_order()));
  CHECK(std::abs(report.mean - exact) <= 3.0 * report.ci_half_width);
  CHECK(report.tau_reference == doctest::Approx(exact).epsilon(1e-12));
  CHECK(report.opt_cost == 1);
  CHECK(report.ratio_estimate == report.mean);
}

TEST_CASE("identical plans reproduce bit-identical reports") {
  TrialPlan plan;
  plan.trials = 20000;
  plan.master_seed = 99;
  const Instance instance = make_example1(9);
  CHECK(same_report(run_trials(instance, plan), run_trials(instance, plan)));

  TrialPlan other = plan;
  other.master_seed = 100;
  CHECK_FALSE(run_trials(instance, other).mean ==
              run_trials(instance, plan).mean);
}

TEST_CASE("worker count never changes the report") {
  const Instance instance = make_example1(7);
  TrialPlan plan;
  plan.trials = 30000;  // several chunks
  plan.master_seed = 1234;
  plan.threads = 1;
  const EstimateReport serial = run_trials(instance, plan);
  for (int threads : {2, 3, 8}) {
    plan.threads = threads;
    CHECK(same_report(serial, run_trials(instance, plan)));
  }
}

TEST_CASE("adversarial dg cascade is exact in the mean") {
  TrialPlan plan;
  plan.algorithm = Algorithm::dg;
  plan.prefs = PreferenceMatrix::identity(10);
  plan.model = ArrivalModel::fixed(ArrivalOrder::last_first(10));
  plan.trials = 64;
  plan.master_seed = 3;
  const EstimateReport report = run_trials(make_example1(10), plan);
  CHECK(report.mean == 10.0);
  CHECK(report.ci_half_width == 0.0);
  CHECK(report.opt_cost == 1);
  CHECK(report.ratio_estimate == 10.0);
}

TEST_CASE("plan validation") {
  TrialPlan plan;
  plan.trials = 0;
  CHECK_THROWS_AS(run_trials(make_example1(2), plan), InvalidParameterError);

  TrialPlan dg_missing;
  dg_missing.algorithm = Algorithm::dg;
  dg_missing.trials = 10;
  CHECK_THROWS_AS(run_trials(make_example1(2), dg_missing),
                  InvalidParameterError);

  TrialPlan wrong_order;
  wrong_order.trials = 10;
  wrong_order.model = ArrivalModel::fixed(ArrivalOrder::identity(3));
  CHECK_THROWS_AS(run_trials(make_example1(2), wrong_order),
                  InvalidParameterError);
}

TEST_CASE("hoeffding reports carry the distribution-free width") {
  TrialPlan plan;
  plan.trials = 5000;
  plan.master_seed = 11;
  plan.ci_method = CiMethod::hoeffding;
  const EstimateReport report = run_trials(make_example1(6), plan);
  CHECK(report.ci_method == CiMethod::hoeffding);
  CHECK(report.ci_half_width ==
        doctest::Approx(hoeffding_half_width(6.0, 5000)).epsilon(1e-12));
}

TEST_CASE("sweep derives seeds per size and keeps input order") {
  SweepSpec spec;
  spec.n_values = {2, 4, 8};
  spec.make_instance = [](int n) { return make_example1(n); };
  TrialPlan plan;
  plan.trials = 20000;
  plan.master_seed = 42;
  const auto reports = sweep(spec, plan);
  REQUIRE(reports.size() == 3);
  // tau(n) grows with n; at this trial count the estimates keep that order.
  CHECK(reports[0].ratio_estimate < reports[1].ratio_estimate);
  CHECK(reports[1].ratio_estimate < reports[2].ratio_estimate);

  // A single-point sweep is run_trials with the derived seed.
  SweepSpec single;
  single.n_values = {6};
  single.make_instance = [](int n) { return make_example1(n); };
  const auto only = sweep(single, plan);
  TrialPlan derived = plan;
  derived.master_seed = derive_seed(plan.master_seed, 6);
  CHECK(same_report(only[0], run_trials(make_example1(6), derived)));

  SweepSpec empty;
  CHECK_THROWS_AS(sweep(empty, plan), InvalidParameterError);
}

TEST_CASE("sweep with the adversarial cascade reports the exact mean") {
  SweepSpec spec;
  spec.n_values = {10};
  spec.make_instance = [](int n) { return make_example1(n); };
  spec.make_model = [](int n) {
    return ArrivalModel::fixed(ArrivalOrder::last_first(n));
  };
  TrialPlan plan;
  plan.algorithm = Algorithm::dg;
  plan.prefs = PreferenceMatrix::identity(10);
  plan.trials = 50;
  plan.master_seed = 8;
  const auto reports = sweep(spec, plan);
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].mean == 10.0);
}

TEST_CASE("estimates land inside the 99.7% interval in repeated meta-trials") {
  // 100 independent estimates of example1(9); at least 99 must cover the
  // exact value at three sigma.
  const Instance instance = make_example1(9);
  const double exact = to_double(
      exact_expected_cost(instance, ArrivalModel::random_order()));
  int covered = 0;
  for (int meta = 0; meta < 100; ++meta) {
    TrialPlan plan;
    plan.trials = 100000;
    plan.master_seed = 1000 + static_cast<std::uint64_t>(meta);
    const EstimateReport report = run_trials(instance, plan);
    const double three_sigma = 3.0 * report.ci_half_width / kNormal975;
    if (std::abs(report.mean - exact) <= three_sigma) ++covered;
  }
  CHECK(covered >= 99);
}
