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

// Experiment front end. Exit codes: 0 success / all checks pass,
// 1 verification or margin failure, 2 usage error, 3 I/O or input-data
// error, 4 resource limit.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ombm/arrival.hpp"
#include "ombm/engine.hpp"
#include "ombm/errors.hpp"
#include "ombm/harmonic.hpp"
#include "ombm/instance.hpp"
#include "ombm/json_io.hpp"
#include "ombm/montecarlo.hpp"
#include "ombm/offline.hpp"
#include "ombm/policies.hpp"
#include "ombm/prefs.hpp"
#include "ombm/recurrence.hpp"
#include "ombm/verify.hpp"
#include "ombm/yao.hpp"

namespace {

using nlohmann::ordered_json;
using namespace ombm;

constexpr const char* kReportHeader =
    "instance,generator,n,k,algorithm,arrival_model,trials,seed,mean_cost,"
    "ci_low,ci_high,ci_method,opt_cost,ratio_estimate,tau_n";

struct GlobalOpts {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
  int threads = 1;
};

std::string fmt_double(double value) {
  char buffer[40];
  std::snprintf(buffer, sizeof buffer, "%.12g", value);
  return buffer;
}

void write_sink(const std::string& out_path, const std::string& data) {
  if (out_path.empty()) {
    std::cout << data;
    std::cout.flush();
    return;
  }
  std::ofstream stream(out_path, std::ios::binary | std::ios::trunc);
  if (!stream) {
    throw IoError("cannot open '" + out_path + "' for writing");
  }
  stream << data;
  stream.flush();
  if (!stream.good()) {
    throw IoError("failed while writing '" + out_path + "'");
  }
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      std::size_t used = 0;
      const int value = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(value);
    } catch (const std::exception&) {
      throw InvalidParameterError(std::string(what) + ": '" + token +
                                  "' is not an integer");
    }
  }
  if (values.empty()) {
    throw InvalidParameterError(std::string(what) + " must be non-empty");
  }
  return values;
}

// Instance selection shared by simulate/exact/opt: either a generator with
// its parameters or a JSON file.
struct InstanceOpts {
  std::string generator;  // example1 | uniform_k | family
  int n = 0;
  std::optional<int> k;
  std::string pi_list;
  std::string instance_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("--generator", generator,
                    "Named generator: example1, uniform_k, family")
        ->check(CLI::IsMember({"example1", "uniform_k", "family"}));
    cmd->add_option("--n", n, "Instance size for a named generator");
    cmd->add_option("--k", k, "Zero-pair count (uniform_k)");
    cmd->add_option("--pi", pi_list,
                    "Comma-separated permutation for the family generator "
                    "(default identity)");
    cmd->add_option("--instance", instance_path, "Instance JSON file");
  }

  bool from_file() const { return !instance_path.empty(); }

  Instance build() const {
    if (from_file()) {
      if (!generator.empty()) {
        throw InvalidParameterError(
            "--instance and --generator are mutually exclusive");
      }
      return load_instance_json(instance_path);
    }
    if (generator.empty()) {
      throw InvalidParameterError(
          "either --instance or --generator is required");
    }
    if (n < 1) {
      throw InvalidParameterError("--n must be >= 1 for generator '" +
                                  generator + "'");
    }
    if (k.has_value() && generator != "uniform_k") {
      throw InvalidParameterError("--k applies to the uniform_k generator only");
    }
    if (!pi_list.empty() && generator != "family") {
      throw InvalidParameterError("--pi applies to the family generator only");
    }
    if (generator == "example1") return make_example1(n);
    if (generator == "uniform_k") {
      if (!k.has_value()) {
        throw InvalidParameterError("--k is required for uniform_k");
      }
      return make_uniform_k(n, *k);
    }
    std::vector<int> pi;
    if (pi_list.empty()) {
      for (int i = 0; i < n; ++i) pi.push_back(i);
    } else {
      pi = parse_int_list(pi_list, "--pi");
    }
    return make_family_instance(n, pi);
  }

  std::string label() const { return from_file() ? instance_path : "generated"; }
  std::string generator_name() const {
    return from_file() ? "file" : generator;
  }
  std::string k_field() const {
    return (generator == "uniform_k" && k.has_value()) ? std::to_string(*k)
                                                       : "";
  }
};

ArrivalOrder make_named_order(const std::string& spec, int n) {
  if (spec == "identity") return ArrivalOrder::identity(n);
  if (spec == "last-first") return ArrivalOrder::last_first(n);
  return ArrivalOrder(parse_int_list(spec, "--order"));
}

PreferenceMatrix make_prefs(const std::string& spec, int n) {
  if (spec == "identity") return PreferenceMatrix::identity(n);
  return load_prefs_json(spec);
}

struct ReportRow {
  std::string instance;
  std::string generator;
  int n = 0;
  std::string k;
  std::string algorithm;
  std::string arrival_model;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  EstimateReport estimate;
};

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
  std::string out = std::string(kReportHeader) + "\n";
  for (const auto& row : rows) {
    const auto& e = row.estimate;
    out += row.instance + "," + row.generator + "," + std::to_string(row.n) +
           "," + row.k + "," + row.algorithm + "," + row.arrival_model + "," +
           std::to_string(row.trials) + "," + std::to_string(row.seed) + "," +
           fmt_double(e.mean) + "," + fmt_double(e.mean - e.ci_half_width) +
           "," + fmt_double(e.mean + e.ci_half_width) + "," +
           (e.ci_method == CiMethod::normal ? "normal" : "hoeffding") + "," +
           fmt_double(to_double(e.opt_cost)) + "," +
           fmt_double(e.ratio_estimate) + "," + fmt_double(e.tau_reference) +
           "\n";
  }
  return out;
}

std::string rows_to_json(const std::vector<ReportRow>& rows) {
  ordered_json doc = ordered_json::array();
  for (const auto& row : rows) {
    const auto& e = row.estimate;
    ordered_json item;
    item["instance"] = row.instance;
    item["generator"] = row.generator;
    item["n"] = row.n;
    if (row.k.empty()) {
      item["k"] = nullptr;
    } else {
      item["k"] = std::stoi(row.k);
    }
    item["algorithm"] = row.algorithm;
    item["arrival_model"] = row.arrival_model;
    item["trials"] = row.trials;
    item["seed"] = row.seed;
    item["mean_cost"] = e.mean;
    item["ci_low"] = e.mean - e.ci_half_width;
    item["ci_high"] = e.mean + e.ci_half_width;
    item["ci_method"] = e.ci_method == CiMethod::normal ? "normal" : "hoeffding";
    item["opt_cost"] = to_double(e.opt_cost);
    item["opt_cost_fraction"] = fraction_string(e.opt_cost);
    item["ratio_estimate"] = e.ratio_estimate;
    item["tau_n"] = e.tau_reference;
    item["tau_fraction"] = fraction_string(tau(row.n));
    doc.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

int cmd_tau(const GlobalOpts& global, int n_max) {
  const std::vector<Rational> taus = tau_table(n_max);
  const std::vector<Rational> h = harmonic_table(n_max + 1);
  std::string out;
  if (global.format == "csv") {
    out = "n,tau_fraction,tau_float,h_next_float\n";
    for (int n = 1; n <= n_max; ++n) {
      out += std::to_string(n) + "," + fraction_string(taus[n]) + "," +
             fmt_double(to_double(taus[n])) + "," +
             fmt_double(to_double(h[n + 1])) + "\n";
    }
  } else {
    ordered_json doc = ordered_json::array();
    for (int n = 1; n <= n_max; ++n) {
      ordered_json item;
      item["n"] = n;
      item["tau_fraction"] = fraction_string(taus[n]);
      item["tau_float"] = to_double(taus[n]);
      item["h_next_float"] = to_double(h[n + 1]);
      doc.push_back(std::move(item));
    }
    out = doc.dump(2) + "\n";
  }
  write_sink(global.out, out);
  return 0;
}

int cmd_recurrence(const GlobalOpts& global, int n, std::optional<int> k) {
  std::string out;
  if (k.has_value()) {
    const Rational value = recurrence_fkn(*k, n);
    const Rational bound = (n - *k) * tau(n);
    if (global.format == "csv") {
      out = "k,n,fkn_fraction,fkn_float,bound_fraction,bound_float\n";
      out += std::to_string(*k) + "," + std::to_string(n) + "," +
             fraction_string(value) + "," + fmt_double(to_double(value)) +
             "," + fraction_string(bound) + "," +
             fmt_double(to_double(bound)) + "\n";
    } else {
      ordered_json item;
      item["k"] = *k;
      item["n"] = n;
      item["fkn_fraction"] = fraction_string(value);
      item["fkn_float"] = to_double(value);
      item["bound_fraction"] = fraction_string(bound);
      item["bound_float"] = to_double(bound);
      out = item.dump(2) + "\n";
    }
  } else {
    const std::vector<Rational> f = recurrence_f_table(n);
    const std::vector<Rational> taus = tau_table(n);
    if (global.format == "csv") {
      out = "n,f_fraction,f_float,tau_fraction,equal\n";
      for (int m = 1; m <= n; ++m) {
        out += std::to_string(m) + "," + fraction_string(f[m]) + "," +
               fmt_double(to_double(f[m])) + "," + fraction_string(taus[m]) +
               "," + (f[m] == taus[m] ? "true" : "false") + "\n";
      }
    } else {
      ordered_json doc = ordered_json::array();
      for (int m = 1; m <= n; ++m) {
        ordered_json item;
        item["n"] = m;
        item["f_fraction"] = fraction_string(f[m]);
        item["f_float"] = to_double(f[m]);
        item["tau_fraction"] = fraction_string(taus[m]);
        item["equal"] = f[m] == taus[m];
        doc.push_back(std::move(item));
      }
      out = doc.dump(2) + "\n";
    }
  }
  write_sink(global.out, out);
  return 0;
}

int cmd_verify(const GlobalOpts& global, int n_max, int kn_max,
               int engine_cap) {
  VerifyOptions options;
  options.f_n_max = n_max;
  options.fkn_n_max = kn_max;
  options.engine_n_max = engine_cap;
  const std::vector<CheckResult> checks = run_verification(options);
  std::string out;
  int failures = 0;
  for (const auto& check : checks) {
    if (check.pass) {
      out += "PASS " + check.name + "\n";
    } else {
      ++failures;
      out += "FAIL " + check.name + ": " + check.detail + "\n";
    }
  }
  out += failures == 0
             ? "verify: all " + std::to_string(checks.size()) + " checks passed\n"
             : "verify: " + std::to_string(failures) + " of " +
                   std::to_string(checks.size()) + " checks FAILED\n";
  write_sink(global.out, out);
  return failures == 0 ? 0 : 1;
}

struct SimulateOpts {
  InstanceOpts instance;
  std::string algorithm = "rg";
  std::string prefs_spec;
  std::string model = "random-order";
  std::string order_spec;
  std::uint64_t trials = 0;
  std::string ci_method = "normal";
};

TrialPlan make_plan(const SimulateOpts& opts, const GlobalOpts& global,
                    int n) {
  TrialPlan plan;
  plan.algorithm = opts.algorithm == "rg" ? Algorithm::rg : Algorithm::dg;
  if (plan.algorithm == Algorithm::dg) {
    if (opts.prefs_spec.empty()) {
      throw InvalidParameterError("--prefs is required with --alg dg");
    }
    plan.prefs = make_prefs(opts.prefs_spec, n);
  } else if (!opts.prefs_spec.empty()) {
    throw InvalidParameterError("--prefs applies to --alg dg only");
  }
  if (opts.model == "adversarial") {
    if (opts.order_spec.empty()) {
      throw InvalidParameterError(
          "--order is required with --model adversarial");
    }
    plan.model = ArrivalModel::fixed(make_named_order(opts.order_spec, n));
  } else if (!opts.order_spec.empty()) {
    throw InvalidParameterError("--order requires --model adversarial");
  }
  plan.trials = opts.trials;
  plan.master_seed = global.seed;
  plan.ci_method =
      opts.ci_method == "normal" ? CiMethod::normal : CiMethod::hoeffding;
  plan.threads = global.threads;
  return plan;
}

ReportRow make_row(const SimulateOpts& opts, const Instance& instance,
                   std::uint64_t seed, const EstimateReport& estimate) {
  ReportRow row;
  row.instance = opts.instance.label();
  row.generator = opts.instance.generator_name();
  row.n = instance.n();
  row.k = opts.instance.k_field();
  row.algorithm = opts.algorithm;
  row.arrival_model = opts.model;
  row.trials = estimate.trials;
  row.seed = seed;
  row.estimate = estimate;
  return row;
}

void print_row_summary(const char* command, const ReportRow& row) {
  std::cerr << command << ": generator=" << row.generator << " n=" << row.n
            << " mean=" << fmt_double(row.estimate.mean)
            << " ci_half_width=" << fmt_double(row.estimate.ci_half_width)
            << " ratio=" << fmt_double(row.estimate.ratio_estimate)
            << " tau=" << fmt_double(row.estimate.tau_reference) << "\n";
}

int cmd_simulate(const GlobalOpts& global, const SimulateOpts& opts) {
  const Instance instance = opts.instance.build();
  const TrialPlan plan = make_plan(opts, global, instance.n());
  const EstimateReport estimate = run_trials(instance, plan);
  const ReportRow row = make_row(opts, instance, global.seed, estimate);
  write_sink(global.out, global.format == "csv"
                             ? rows_to_csv({row})
                             : rows_to_json({row}));
  print_row_summary("simulate", row);
  return 0;
}

struct SweepOpts {
  SimulateOpts simulate;
  std::string n_values_list;
  std::string k_rule = "none";
};

int k_from_rule(const std::string& rule, int n) {
  if (rule == "n") return n;
  if (rule == "n-1") return n - 1;
  if (rule == "n/2") return n / 2;
  try {
    std::size_t used = 0;
    const int value = std::stoi(rule, &used);
    if (used != rule.size()) throw std::invalid_argument(rule);
    return value;
  } catch (const std::exception&) {
    throw InvalidParameterError("--k-rule must be one of none, n, n-1, n/2, "
                                "or an integer; got '" +
                                rule + "'");
  }
}

int cmd_sweep(const GlobalOpts& global, const SweepOpts& opts) {
  const std::vector<int> n_values =
      parse_int_list(opts.n_values_list, "--n-values");
  const SimulateOpts& sim = opts.simulate;
  if (sim.instance.from_file()) {
    throw InvalidParameterError("sweep works with named generators only");
  }
  if (sim.model == "adversarial" && sim.order_spec != "identity" &&
      sim.order_spec != "last-first") {
    throw InvalidParameterError(
        "sweep adversarial orders must be named: identity or last-first");
  }

  std::vector<ReportRow> rows;
  rows.reserve(n_values.size());
  for (int n : n_values) {
    SimulateOpts point = sim;
    point.instance.n = n;
    if (point.instance.generator == "uniform_k") {
      if (opts.k_rule == "none") {
        throw InvalidParameterError("--k-rule is required for uniform_k sweeps");
      }
      point.instance.k = k_from_rule(opts.k_rule, n);
    }
    const Instance instance = point.instance.build();
    TrialPlan plan = make_plan(point, global, n);
    plan.master_seed = derive_seed(global.seed, static_cast<std::uint64_t>(n));
    const EstimateReport estimate = run_trials(instance, plan);
    rows.push_back(make_row(point, instance, plan.master_seed, estimate));
  }
  write_sink(global.out, global.format == "csv" ? rows_to_csv(rows)
                                                : rows_to_json(rows));
  for (const auto& row : rows) print_row_summary("sweep", row);
  return 0;
}

int cmd_exact(const GlobalOpts& global, const InstanceOpts& instance_opts,
              const std::string& model, const std::string& order_spec,
              int cap) {
  const Instance instance = instance_opts.build();
  ArrivalModel arrival_model = ArrivalModel::random_order();
  if (model == "fixed") {
    if (order_spec.empty()) {
      throw InvalidParameterError("--order is required with --model fixed");
    }
    arrival_model =
        ArrivalModel::fixed(make_named_order(order_spec, instance.n()));
  } else if (!order_spec.empty()) {
    throw InvalidParameterError("--order requires --model fixed");
  }
  EngineOptions options;
  options.cap = cap;
  const Rational value = exact_expected_cost(instance, arrival_model, options);
  const Rational tau_n = tau(instance.n());

  std::string out;
  if (global.format == "csv") {
    out = "generator,n,k,model,expected_cost_fraction,expected_cost_float,"
          "tau_fraction,tau_float\n";
    out += instance_opts.generator_name() + "," +
           std::to_string(instance.n()) + "," + instance_opts.k_field() + "," +
           model + "," + fraction_string(value) + "," +
           fmt_double(to_double(value)) + "," + fraction_string(tau_n) + "," +
           fmt_double(to_double(tau_n)) + "\n";
  } else {
    ordered_json item;
    item["generator"] = instance_opts.generator_name();
    item["n"] = instance.n();
    item["k"] = instance_opts.k_field().empty()
                    ? ordered_json(nullptr)
                    : ordered_json(std::stoi(instance_opts.k_field()));
    item["model"] = model;
    item["expected_cost_fraction"] = fraction_string(value);
    item["expected_cost_float"] = to_double(value);
    item["tau_fraction"] = fraction_string(tau_n);
    item["tau_float"] = to_double(tau_n);
    out = item.dump(2) + "\n";
  }
  write_sink(global.out, out);
  std::cerr << "exact: n=" << instance.n() << " expected_cost="
            << fraction_string(value) << " (" << fmt_double(to_double(value))
            << ")\n";
  return 0;
}

struct LowerBoundOpts {
  int n = 0;
  std::string mode = "exhaustive";
  std::uint64_t trials = 10000;
  std::string prefs_source = "enumerate";
  int count = 20;
  std::string prefs_path;
};

int cmd_lowerbound(const GlobalOpts& global, const LowerBoundOpts& opts) {
  std::vector<std::pair<std::string, PreferenceMatrix>> matrices;
  if (opts.prefs_source == "enumerate") {
    const auto all = enumerate_preference_matrices(opts.n);
    for (std::size_t m = 0; m < all.size(); ++m) {
      matrices.emplace_back("e" + std::to_string(m), all[m]);
    }
  } else if (opts.prefs_source == "random") {
    for (int m = 0; m < opts.count; ++m) {
      Rng rng = Rng::substream(global.seed,
                               0x70726566u + static_cast<std::uint64_t>(m));
      matrices.emplace_back("r" + std::to_string(m),
                            PreferenceMatrix::sampled(opts.n, rng));
    }
  } else {
    if (opts.prefs_path.empty()) {
      throw InvalidParameterError("--prefs is required with --prefs-source file");
    }
    matrices.emplace_back("file", load_prefs_json(opts.prefs_path));
  }

  const Rational tau_n = tau(opts.n);
  std::string out =
      "prefs_id,n,mode,samples,expected_cost_fraction,expected_cost_float,"
      "tau_fraction,tau_float,margin_float,hoeffding_half_width,pass\n";
  ordered_json doc = ordered_json::array();
  bool all_pass = true;
  Rational min_margin;
  bool min_margin_set = false;
  for (std::size_t m = 0; m < matrices.size(); ++m) {
    const auto& [id, prefs] = matrices[m];
    const YaoMode mode =
        opts.mode == "exhaustive"
            ? YaoMode::exhaustive()
            : YaoMode::sampled(opts.trials,
                               derive_seed(global.seed,
                                           static_cast<std::uint64_t>(m)));
    const YaoResult result = yao_expected_cost(opts.n, prefs, mode);
    const Rational margin = result.expected_cost - tau_n;
    const bool pass = result.exact
                          ? margin >= 0
                          : to_double(margin) >= -result.hoeffding_half_width;
    all_pass = all_pass && pass;
    if (!min_margin_set || margin < min_margin) {
      min_margin = margin;
      min_margin_set = true;
    }
    if (global.format == "csv") {
      out += id + "," + std::to_string(opts.n) + "," + opts.mode + "," +
             std::to_string(result.samples) + "," +
             fraction_string(result.expected_cost) + "," +
             fmt_double(to_double(result.expected_cost)) + "," +
             fraction_string(tau_n) + "," + fmt_double(to_double(tau_n)) +
             "," + fmt_double(to_double(margin)) + "," +
             fmt_double(result.hoeffding_half_width) + "," +
             (pass ? "true" : "false") + "\n";
    } else {
      ordered_json item;
      item["prefs_id"] = id;
      item["n"] = opts.n;
      item["mode"] = opts.mode;
      item["samples"] = result.samples;
      item["expected_cost_fraction"] = fraction_string(result.expected_cost);
      item["expected_cost_float"] = to_double(result.expected_cost);
      item["tau_fraction"] = fraction_string(tau_n);
      item["tau_float"] = to_double(tau_n);
      item["margin_float"] = to_double(margin);
      item["hoeffding_half_width"] = result.hoeffding_half_width;
      item["pass"] = pass;
      doc.push_back(std::move(item));
    }
  }
  write_sink(global.out,
             global.format == "csv" ? out : doc.dump(2) + "\n");
  std::cerr << "lowerbound: n=" << opts.n << " matrices=" << matrices.size()
            << " deterministic_bound=" << count_deterministic_bound(opts.n).get_str()
            << " min_margin=" << fmt_double(to_double(min_margin))
            << (all_pass ? " all margins pass" : " MARGIN FAILURE") << "\n";
  return all_pass ? 0 : 1;
}

int cmd_plotdata(const GlobalOpts& global, const std::string& in_path) {
  const std::string text = read_file(in_path);
  std::stringstream stream(text);
  std::string line;
  if (!std::getline(stream, line)) {
    throw ParseError("plot-data: '" + in_path + "' is empty; expected a header");
  }
  auto split = [](const std::string& s) {
    std::vector<std::string> fields;
    std::stringstream row(s);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    if (!s.empty() && s.back() == ',') fields.push_back("");
    return fields;
  };
  const std::vector<std::string> header = split(line);
  auto column = [&](const std::string& name) {
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (header[c] == name) return c;
    }
    throw ParseError("plot-data: missing column '" + name + "' in '" +
                     in_path + "'");
  };
  const std::size_t n_col = column("n");
  const std::size_t ratio_col = column("ratio_estimate");
  const std::size_t tau_col = column("tau_n");

  std::string out = "n,ratio_estimate,tau_n\n";
  ordered_json doc = ordered_json::array();
  std::size_t line_number = 1;
  while (std::getline(stream, line)) {
    ++line_number;
    if (line.empty()) continue;
    const std::vector<std::string> fields = split(line);
    if (fields.size() != header.size()) {
      throw ParseError("plot-data: row " + std::to_string(line_number) +
                       " has " + std::to_string(fields.size()) +
                       " fields; header has " +
                       std::to_string(header.size()));
    }
    if (global.format == "csv") {
      out += fields[n_col] + "," + fields[ratio_col] + "," + fields[tau_col] +
             "\n";
    } else {
      ordered_json item;
      item["n"] = std::stoi(fields[n_col]);
      item["ratio_estimate"] = std::stod(fields[ratio_col]);
      item["tau_n"] = std::stod(fields[tau_col]);
      doc.push_back(std::move(item));
    }
  }
  write_sink(global.out,
             global.format == "csv" ? out : doc.dump(2) + "\n");
  return 0;
}

int cmd_opt(const GlobalOpts& global, const InstanceOpts& instance_opts) {
  const Instance instance = instance_opts.build();
  const OptResult result = solve_assignment(instance);
  std::string out;
  if (global.format == "csv") {
    out = "l,r,cost_fraction\n";
    for (int i = 0; i < instance.n(); ++i) {
      const int j = result.matching[static_cast<std::size_t>(i)];
      out += std::to_string(i) + "," + std::to_string(j) + "," +
             fraction_string(instance.cost(i, j)) + "\n";
    }
  } else {
    ordered_json doc;
    doc["cost_fraction"] = fraction_string(result.cost);
    doc["cost"] = to_double(result.cost);
    ordered_json matching = ordered_json::array();
    for (int i = 0; i < instance.n(); ++i) {
      matching.push_back(ordered_json::array(
          {i, result.matching[static_cast<std::size_t>(i)]}));
    }
    doc["matching"] = std::move(matching);
    out = doc.dump(2) + "\n";
  }
  write_sink(global.out, out);
  std::cerr << "opt: n=" << instance.n() << " cost="
            << fraction_string(result.cost) << " ("
            << fmt_double(to_double(result.cost)) << ")\n";
  return 0;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Online minimum bipartite matching experiments under the "
               "uniform metric"};
  app.require_subcommand(1);

  GlobalOpts global;
  app.add_option("--seed", global.seed, "Master seed for all randomness");
  app.add_option("--out", global.out, "Output file (default: stdout)");
  app.add_option("--format", global.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", global.threads, "Worker threads for simulation")
      ->check(CLI::PositiveNumber)
      ->envname("OMBM_THREADS");

  // tau
  auto* tau_cmd = app.add_subcommand("tau", "Tabulate tau(n) = (1+1/n)(H_{n+1}-1)");
  tau_cmd->fallthrough();
  int tau_n_max = 0;
  tau_cmd->add_option("--n-max", tau_n_max, "Largest n")
      ->required()
      ->check(CLI::PositiveNumber);

  // recurrence
  auto* rec_cmd = app.add_subcommand(
      "recurrence", "Evaluate F(n) against tau(n), or F(k, n) with --k");
  rec_cmd->fallthrough();
  int rec_n = 0;
  std::optional<int> rec_k;
  rec_cmd->add_option("--n", rec_n, "Largest n (or the n for F(k, n))")
      ->required()
      ->check(CLI::PositiveNumber);
  rec_cmd->add_option("--k", rec_k, "Evaluate the two-parameter recurrence");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "Run the exact analysis check suite");
  verify_cmd->fallthrough();
  int verify_n_max = 500;
  int verify_kn_max = 300;
  int verify_engine_cap = 7;
  verify_cmd->add_option("--n-max", verify_n_max, "recurrence_F == tau range")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--kn-max", verify_kn_max, "F(k,n) bound range")
      ->check(CLI::PositiveNumber);
  verify_cmd
      ->add_option("--engine-cap", verify_engine_cap,
                   "Engine-vs-recurrence equality range")
      ->check(CLI::PositiveNumber);

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo cost estimate");
  sim_cmd->fallthrough();
  SimulateOpts sim;
  sim.instance.attach(sim_cmd);
  sim_cmd->add_option("--alg", sim.algorithm, "Online algorithm")
      ->check(CLI::IsMember({"rg", "dg"}));
  sim_cmd->add_option("--prefs", sim.prefs_spec,
                      "Preference matrix: 'identity' or a JSON file (dg)");
  sim_cmd->add_option("--model", sim.model, "Arrival model")
      ->check(CLI::IsMember({"random-order", "adversarial"}));
  sim_cmd->add_option("--order", sim.order_spec,
                      "Arrival order: identity, last-first, or a comma list");
  sim_cmd->add_option("--trials", sim.trials, "Trial count")
      ->required()
      ->check(CLI::PositiveNumber);
  sim_cmd->add_option("--ci-method", sim.ci_method, "Interval method")
      ->check(CLI::IsMember({"normal", "hoeffding"}));

  // sweep
  auto* sweep_cmd =
      app.add_subcommand("sweep", "simulate across a list of sizes");
  sweep_cmd->fallthrough();
  SweepOpts sweep_opts;
  sweep_opts.simulate.instance.attach(sweep_cmd);
  sweep_cmd->add_option("--n-values", sweep_opts.n_values_list,
                        "Comma-separated sizes")
      ->required();
  sweep_cmd->add_option("--k-rule", sweep_opts.k_rule,
                        "k per n for uniform_k: n, n-1, n/2, or an integer");
  sweep_cmd->add_option("--alg", sweep_opts.simulate.algorithm, "Online algorithm")
      ->check(CLI::IsMember({"rg", "dg"}));
  sweep_cmd->add_option("--prefs", sweep_opts.simulate.prefs_spec,
                        "Preference matrix: 'identity' (dg)");
  sweep_cmd->add_option("--model", sweep_opts.simulate.model, "Arrival model")
      ->check(CLI::IsMember({"random-order", "adversarial"}));
  sweep_cmd->add_option("--order", sweep_opts.simulate.order_spec,
                        "Named arrival order: identity or last-first");
  sweep_cmd->add_option("--trials", sweep_opts.simulate.trials, "Trials per size")
      ->required()
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--ci-method", sweep_opts.simulate.ci_method,
                        "Interval method")
      ->check(CLI::IsMember({"normal", "hoeffding"}));

  // exact
  auto* exact_cmd = app.add_subcommand(
      "exact", "Exact expected randomized-greedy cost (subset-state engine)");
  exact_cmd->fallthrough();
  InstanceOpts exact_instance;
  exact_instance.attach(exact_cmd);
  std::string exact_model = "random-order";
  std::string exact_order;
  int exact_cap = 12;
  exact_cmd->add_option("--model", exact_model, "Arrival model")
      ->check(CLI::IsMember({"random-order", "fixed"}));
  exact_cmd->add_option("--order", exact_order,
                        "Arrival order for --model fixed");
  exact_cmd->add_option("--cap", exact_cap, "Engine size cap")
      ->check(CLI::PositiveNumber);

  // lowerbound
  auto* lb_cmd = app.add_subcommand(
      "lowerbound", "Evaluate deterministic matrices against tau(n)");
  lb_cmd->fallthrough();
  LowerBoundOpts lb;
  lb_cmd->add_option("--n", lb.n, "Instance size")
      ->required()
      ->check(CLI::PositiveNumber);
  lb_cmd->add_option("--mode", lb.mode, "Evaluation mode")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));
  lb_cmd->add_option("--trials", lb.trials, "Samples per matrix (sampled mode)")
      ->check(CLI::PositiveNumber);
  lb_cmd->add_option("--prefs-source", lb.prefs_source, "Matrix source")
      ->check(CLI::IsMember({"enumerate", "random", "file"}));
  lb_cmd->add_option("--count", lb.count, "Matrix count for --prefs-source random")
      ->check(CLI::PositiveNumber);
  lb_cmd->add_option("--prefs", lb.prefs_path,
                     "Preference JSON for --prefs-source file");

  // plot-data
  auto* plot_cmd = app.add_subcommand(
      "plot-data", "Project (n, ratio_estimate, tau_n) from a results CSV");
  plot_cmd->fallthrough();
  std::string plot_in;
  plot_cmd->add_option("--in", plot_in, "Source CSV")->required();

  // opt
  auto* opt_cmd =
      app.add_subcommand("opt", "Offline optimal matching of an instance");
  opt_cmd->fallthrough();
  InstanceOpts opt_instance;
  opt_instance.attach(opt_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (tau_cmd->parsed()) return cmd_tau(global, tau_n_max);
  if (rec_cmd->parsed()) return cmd_recurrence(global, rec_n, rec_k);
  if (verify_cmd->parsed()) {
    return cmd_verify(global, verify_n_max, verify_kn_max, verify_engine_cap);
  }
  if (sim_cmd->parsed()) return cmd_simulate(global, sim);
  if (sweep_cmd->parsed()) return cmd_sweep(global, sweep_opts);
  if (exact_cmd->parsed()) {
    return cmd_exact(global, exact_instance, exact_model, exact_order,
                     exact_cap);
  }
  if (lb_cmd->parsed()) return cmd_lowerbound(global, lb);
  if (plot_cmd->parsed()) return cmd_plotdata(global, plot_in);
  if (opt_cmd->parsed()) return cmd_opt(global, opt_instance);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const ResourceLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InvalidParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedMetricError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
