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

#include "ombm/harmonic.hpp"

#include <string>

#include "ombm/errors.hpp"

namespace ombm {

namespace {

void require_positive(int n, const char* what) {
  if (n < 1) {
    throw InvalidParameterError(std::string(what) + " must be >= 1, got " +
                                std::to_string(n));
  }
}

}  // namespace

Rational harmonic(int n) {
  require_positive(n, "harmonic index");
  Rational sum(0);
  for (int k = 1; k <= n; ++k) sum += make_ratio(1, k);
  return sum;
}

std::vector<Rational> harmonic_table(int n_max) {
  std::vector<Rational> table(static_cast<std::size_t>(n_max) + 1);
  table[0] = 0;
  for (int k = 1; k <= n_max; ++k) {
    table[static_cast<std::size_t>(k)] =
        table[static_cast<std::size_t>(k) - 1] + make_ratio(1, k);
  }
  return table;
}

Rational tau(int n) {
  require_positive(n, "tau argument");
  return make_ratio(n + 1, n) * (harmonic(n + 1) - 1);
}

std::vector<Rational> tau_table(int n_max) {
  require_positive(n_max, "tau table bound");
  const std::vector<Rational> h = harmonic_table(n_max + 1);
  std::vector<Rational> table(static_cast<std::size_t>(n_max) + 1);
  table[0] = 0;
  for (int n = 1; n <= n_max; ++n) {
    table[static_cast<std::size_t>(n)] =
        make_ratio(n + 1, n) * (h[static_cast<std::size_t>(n) + 1] - 1);
  }
  return table;
}

}  // namespace ombm
