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

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ombm/arrival.hpp"
#include "ombm/instance.hpp"
#include "ombm/prefs.hpp"
#include "ombm/rational.hpp"

namespace ombm {

enum class Algorithm { rg, dg };
enum class CiMethod { normal, hoeffding };

/// Trial t draws its randomness from substream (master_seed, t); the
/// assignment is independent of worker count, so reports are bit-identical
/// for any `threads`.
struct TrialPlan {
  Algorithm algorithm = Algorithm::rg;
  std::optional<PreferenceMatrix> prefs;  // required for dg
  ArrivalModel model = ArrivalModel::random_order();
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  CiMethod ci_method = CiMethod::normal;
  int threads = 1;
};

struct EstimateReport {
  std::uint64_t trials = 0;
  double mean = 0.0;
  double ci_half_width = 0.0;
  CiMethod ci_method = CiMethod::normal;
  Rational opt_cost;
  double ratio_estimate = 0.0;  // mean / opt; NaN when opt is zero
  double tau_reference = 0.0;   // float(tau(n)) for the instance size
};

EstimateReport run_trials(const Instance& instance, const TrialPlan& plan);

/// One run_trials per n, in input order, with per-n seeds derived from the
/// template's master seed (derive_seed(master, n)).
struct SweepSpec {
  std::vector<int> n_values;
  std::function<Instance(int)> make_instance;
  std::function<ArrivalModel(int)> make_model;
};

std::vector<EstimateReport> sweep(const SweepSpec& spec,
                                  const TrialPlan& plan_template);

}  // namespace ombm
