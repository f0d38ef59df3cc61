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

#include "ombm/verify.hpp"

#include "ombm/engine.hpp"
#include "ombm/errors.hpp"
#include "ombm/harmonic.hpp"
#include "ombm/instance.hpp"
#include "ombm/recurrence.hpp"

namespace ombm {

namespace {

std::string kn_coord(int k, int n) {
  return "(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")";
}

}  // namespace

std::vector<CheckResult> check_f_equals_tau(int n_max) {
  if (n_max < 1) throw InvalidParameterError("n_max must be >= 1");
  CheckResult result{"recurrence_F(n) == tau(n) for 1 <= n <= " +
                         std::to_string(n_max),
                     true, ""};
  const std::vector<Rational> f = recurrence_f_table(n_max);
  const std::vector<Rational> taus = tau_table(n_max);
  for (int n = 1; n <= n_max; ++n) {
    if (f[static_cast<std::size_t>(n)] != taus[static_cast<std::size_t>(n)]) {
      result.pass = false;
      result.detail = "first mismatch at n=" + std::to_string(n) + ": F=" +
                      fraction_string(f[static_cast<std::size_t>(n)]) +
                      ", tau=" +
                      fraction_string(taus[static_cast<std::size_t>(n)]);
      break;
    }
  }
  return {result};
}

std::vector<CheckResult> check_fkn_rows(int n_max, const FknRowStep& step) {
  if (n_max < 1) throw InvalidParameterError("n_max must be >= 1");
  const std::string bound_name = "F(k,n) <= (n-k)(1+1/n)(H_{n+1}-1) for n <= " +
                                 std::to_string(n_max);
  CheckResult base{"base cases F(0,1)=1 and F(1,1)=0", true, ""};
  CheckResult bound{bound_name, true, ""};
  CheckResult attained{"equality F(n-1,n) == tau(n) for n <= " +
                           std::to_string(n_max),
                       true, ""};
  CheckResult boundary{"F(n,n) == 0 and F(0,n) == n for n <= " +
                           std::to_string(n_max),
                       true, ""};

  const std::vector<Rational> taus = tau_table(n_max);
  std::vector<Rational> row;
  for (int n = 1; n <= n_max; ++n) {
    row = step(n, row);
    if (n == 1 && (row.size() != 2 || row[0] != 1 || row[1] != 0)) {
      base.pass = false;
      base.detail = "F(0,1)=" + fraction_string(row.empty() ? Rational(0) : row[0]) +
                    ", F(1,1)=" +
                    fraction_string(row.size() < 2 ? Rational(0) : row[1]);
    }
    const Rational& tau_n = taus[static_cast<std::size_t>(n)];
    for (int k = 0; k <= n; ++k) {
      const Rational& value = row[static_cast<std::size_t>(k)];
      if (bound.pass && value > (n - k) * tau_n) {
        bound.pass = false;
        bound.detail = "violated at " + kn_coord(k, n) + ": F=" +
                       fraction_string(value) + " > " +
                       fraction_string((n - k) * tau_n);
      }
    }
    if (attained.pass && row[static_cast<std::size_t>(n) - 1] != tau_n) {
      attained.pass = false;
      attained.detail = "at " + kn_coord(n - 1, n) + ": F=" +
                        fraction_string(row[static_cast<std::size_t>(n) - 1]) +
                        ", tau=" + fraction_string(tau_n);
    }
    if (boundary.pass && (row[static_cast<std::size_t>(n)] != 0 ||
                          row[0] != Rational(n))) {
      boundary.pass = false;
      boundary.detail = "at n=" + std::to_string(n) + ": F(n,n)=" +
                        fraction_string(row[static_cast<std::size_t>(n)]) +
                        ", F(0,n)=" + fraction_string(row[0]);
    }
  }
  return {base, bound, attained, boundary};
}

std::vector<CheckResult> check_engine_matches_fkn(int n_max) {
  if (n_max < 1) throw InvalidParameterError("n_max must be >= 1");
  CheckResult result{
      "exact_expected_cost(uniform_k(n,k)) == F(k,n) for n <= " +
          std::to_string(n_max),
      true, ""};
  EngineOptions options;
  options.cap = n_max;
  std::vector<Rational> row;
  for (int n = 1; n <= n_max && result.pass; ++n) {
    row = fkn_next_row(n, row);
    for (int k = 0; k <= n; ++k) {
      const Rational engine = exact_expected_cost(
          make_uniform_k(n, k), ArrivalModel::random_order(), options);
      if (engine != row[static_cast<std::size_t>(k)]) {
        result.pass = false;
        result.detail = "first mismatch at " + kn_coord(k, n) + ": engine=" +
                        fraction_string(engine) + ", recurrence=" +
                        fraction_string(row[static_cast<std::size_t>(k)]);
        break;
      }
    }
  }
  return {result};
}

std::vector<CheckResult> run_verification(const VerifyOptions& options) {
  std::vector<CheckResult> results = check_f_equals_tau(options.f_n_max);
  for (auto& check : check_fkn_rows(options.fkn_n_max, fkn_next_row)) {
    results.push_back(std::move(check));
  }
  for (auto& check : check_engine_matches_fkn(options.engine_n_max)) {
    results.push_back(std::move(check));
  }
  return results;
}

}  // namespace ombm
