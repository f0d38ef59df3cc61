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

#include "ombm/recurrence.hpp"

#include <string>

#include "ombm/errors.hpp"

namespace ombm {

namespace {

void require_positive(int n) {
  if (n < 1) {
    throw InvalidParameterError("recurrence argument must be >= 1, got " +
                                std::to_string(n));
  }
}

}  // namespace

std::vector<Rational> recurrence_f_table(int n_max) {
  require_positive(n_max);
  std::vector<Rational> f(static_cast<std::size_t>(n_max) + 1);
  f[0] = 0;
  if (n_max >= 1) f[1] = 1;
  for (int n = 2; n <= n_max; ++n) {
    Rational sum(0);
    for (int t = 1; t <= n - 1; ++t) {
      sum += (Rational(1) - make_ratio(1, n - t + 1)) *
             f[static_cast<std::size_t>(n - t)];
    }
    f[static_cast<std::size_t>(n)] = Rational(1) + sum / n;
  }
  return f;
}

Rational recurrence_f(int n) {
  require_positive(n);
  return recurrence_f_table(n).back();
}

std::vector<Rational> fkn_base_row() { return {Rational(1), Rational(0)}; }

std::vector<Rational> fkn_next_row(int n, const std::vector<Rational>& prev) {
  if (n == 1) return fkn_base_row();
  if (static_cast<int>(prev.size()) != n) {
    throw InvalidParameterError("previous row must have size n, got " +
                                std::to_string(prev.size()) + " for n=" +
                                std::to_string(n));
  }
  std::vector<Rational> row(static_cast<std::size_t>(n) + 1);
  row[static_cast<std::size_t>(n)] = 0;  // k = n: no cost is ever paid
  for (int k = 0; k < n; ++k) {
    const Rational miss = Rational(1) - make_ratio(k, n);  // 1 - k/n
    Rational value = miss + miss * miss * prev[static_cast<std::size_t>(k)];
    if (k > 0) {
      value += make_ratio(k, n) * (Rational(2) - make_ratio(k, n)) *
               prev[static_cast<std::size_t>(k) - 1];
    }
    row[static_cast<std::size_t>(k)] = std::move(value);
  }
  return row;
}

Rational recurrence_fkn(int k, int n) {
  require_positive(n);
  if (k < 0 || k > n) {
    throw InvalidParameterError("k must satisfy 0 <= k <= n; got k=" +
                                std::to_string(k) + ", n=" + std::to_string(n));
  }
  std::vector<Rational> row = fkn_base_row();
  for (int m = 2; m <= n; ++m) row = fkn_next_row(m, row);
  return row[static_cast<std::size_t>(k)];
}

Integer count_deterministic_bound(int n) {
  require_positive(n);
  Integer factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(n));
  return Integer(n) * Integer(n) * factorial;
}

}  // namespace ombm
