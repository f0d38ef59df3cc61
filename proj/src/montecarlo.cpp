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

#include "ombm/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "ombm/errors.hpp"
#include "ombm/greedy.hpp"
#include "ombm/harmonic.hpp"
#include "ombm/offline.hpp"
#include "ombm/stats.hpp"

namespace ombm {

namespace {

// Unit of work distribution; chunk partials are always combined in chunk
// order, which makes the aggregate independent of the worker count.
constexpr std::uint64_t kChunkTrials = 4096;

struct ChunkStats {
  double sum = 0.0;
  double sum_sq = 0.0;
};

struct TrialContext {
  const Instance& instance;
  const TrialPlan& plan;
  std::vector<double> dense_costs;  // general metric only

  explicit TrialContext(const Instance& inst, const TrialPlan& p)
      : instance(inst), plan(p) {
    if (!instance.is_uniform()) {
      const int n = instance.n();
      dense_costs.resize(static_cast<std::size_t>(n) *
                         static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          dense_costs[static_cast<std::size_t>(i) *
                          static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(j)] =
              to_double(instance.cost(i, j));
        }
      }
    }
  }
};

struct TrialWorkspace {
  FreeSet free_set;
  GreedyScratch scratch;
  std::vector<int> order;

  explicit TrialWorkspace(int n) : free_set(n) {
    order.resize(static_cast<std::size_t>(n));
  }
};

double one_trial(const TrialContext& ctx, std::uint64_t trial,
                 TrialWorkspace& ws) {
  const int n = ctx.instance.n();
  Rng rng = Rng::substream(ctx.plan.master_seed, trial);
  const std::vector<int>* order;
  if (ctx.plan.model.is_random_order()) {
    for (int t = 0; t < n; ++t) ws.order[static_cast<std::size_t>(t)] = t;
    shuffle(ws.order, rng);
    order = &ws.order;
  } else {
    order = &ctx.plan.model.fixed_order().sequence();
  }
  ws.free_set.reset(n);
  double cost = 0.0;
  for (int t = 0; t < n; ++t) {
    const int j = (*order)[static_cast<std::size_t>(t)];
    bool zero = false;
    int i;
    if (ctx.plan.algorithm == Algorithm::rg) {
      i = rg_choose(ctx.instance, ws.free_set, j, rng, ws.scratch, &zero);
    } else {
      i = dg_choose(ctx.instance, ws.free_set, j, ctx.plan.prefs->row(j),
                    &zero);
    }
    ws.free_set.remove(i);
    if (ctx.instance.is_uniform()) {
      if (!zero) cost += 1.0;
    } else {
      cost += ctx.dense_costs[static_cast<std::size_t>(i) *
                                  static_cast<std::size_t>(n) +
                              static_cast<std::size_t>(j)];
    }
  }
  return cost;
}

ChunkStats run_chunk(const TrialContext& ctx, std::uint64_t first,
                     std::uint64_t last, TrialWorkspace& ws) {
  KahanSum sum;
  KahanSum sum_sq;
  for (std::uint64_t t = first; t < last; ++t) {
    const double cost = one_trial(ctx, t, ws);
    sum.add(cost);
    sum_sq.add(cost * cost);
  }
  return ChunkStats{sum.value(), sum_sq.value()};
}

// Upper bound on any single run cost: the per-arrival maxima summed. Equals
// n on uniform instances unless a column is entirely zero.
double cost_range_upper(const Instance& instance) {
  const int n = instance.n();
  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    if (instance.is_uniform()) {
      if (static_cast<int>(instance.zero_neighbors(j).size()) < n) total += 1.0;
    } else {
      double column_max = 0.0;
      for (int i = 0; i < n; ++i) {
        column_max = std::max(column_max, to_double(instance.cost(i, j)));
      }
      total += column_max;
    }
  }
  return total;
}

}  // namespace

EstimateReport run_trials(const Instance& instance, const TrialPlan& plan) {
  if (plan.trials < 1) {
    throw InvalidParameterError("trials must be >= 1");
  }
  if (plan.algorithm == Algorithm::dg) {
    if (!plan.prefs.has_value()) {
      throw InvalidParameterError(
          "deterministic greedy needs a preference matrix");
    }
    if (plan.prefs->n() != instance.n()) {
      throw InvalidParameterError("preference matrix size " +
                                  std::to_string(plan.prefs->n()) +
                                  " does not match instance size " +
                                  std::to_string(instance.n()));
    }
  }
  if (!plan.model.is_random_order() &&
      plan.model.fixed_order().size() != instance.n()) {
    throw InvalidParameterError("fixed arrival order size " +
                                std::to_string(plan.model.fixed_order().size()) +
                                " does not match instance size " +
                                std::to_string(instance.n()));
  }

  const TrialContext ctx(instance, plan);
  const std::uint64_t chunk_count =
      (plan.trials + kChunkTrials - 1) / kChunkTrials;
  std::vector<ChunkStats> partials(static_cast<std::size_t>(chunk_count));

  const int workers =
      static_cast<int>(std::min<std::uint64_t>(
          chunk_count, static_cast<std::uint64_t>(std::max(1, plan.threads))));
  auto worker_loop = [&](std::atomic<std::uint64_t>& next) {
    TrialWorkspace ws(instance.n());
    for (;;) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunk_count) break;
      const std::uint64_t first = c * kChunkTrials;
      const std::uint64_t last = std::min(plan.trials, first + kChunkTrials);
      partials[static_cast<std::size_t>(c)] = run_chunk(ctx, first, last, ws);
    }
  };
  std::atomic<std::uint64_t> next_chunk{0};
  if (workers <= 1) {
    worker_loop(next_chunk);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] { worker_loop(next_chunk); });
    }
    for (auto& thread : pool) thread.join();
  }

  KahanSum sum;
  KahanSum sum_sq;
  for (const ChunkStats& chunk : partials) {
    sum.add(chunk.sum);
    sum_sq.add(chunk.sum_sq);
  }

  EstimateReport report;
  report.trials = plan.trials;
  report.mean = sum.value() / static_cast<double>(plan.trials);
  report.ci_method = plan.ci_method;
  if (plan.ci_method == CiMethod::normal) {
    report.ci_half_width =
        normal_ci_half_width(sum.value(), sum_sq.value(), plan.trials);
  } else {
    // Run costs live in [0, sum of column maxima]; [0, n] on uniform
    // instances.
    report.ci_half_width =
        hoeffding_half_width(cost_range_upper(instance), plan.trials);
  }
  report.opt_cost = optimal_cost(instance);
  const double opt = to_double(report.opt_cost);
  report.ratio_estimate = opt == 0.0
                              ? std::numeric_limits<double>::quiet_NaN()
                              : report.mean / opt;
  report.tau_reference = to_double(tau(instance.n()));
  return report;
}

std::vector<EstimateReport> sweep(const SweepSpec& spec,
                                  const TrialPlan& plan_template) {
  if (spec.n_values.empty()) {
    throw InvalidParameterError("sweep needs at least one n value");
  }
  if (!spec.make_instance) {
    throw InvalidParameterError("sweep needs an instance factory");
  }
  std::vector<EstimateReport> reports;
  reports.reserve(spec.n_values.size());
  for (int n : spec.n_values) {
    TrialPlan plan = plan_template;
    plan.master_seed =
        derive_seed(plan_template.master_seed, static_cast<std::uint64_t>(n));
    if (spec.make_model) plan.model = spec.make_model(n);
    reports.push_back(run_trials(spec.make_instance(n), plan));
  }
  return reports;
}

}  // namespace ombm
