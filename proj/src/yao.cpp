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

#include "ombm/yao.hpp"

#include <algorithm>
#include <string>

#include "ombm/errors.hpp"
#include "ombm/rng.hpp"
#include "ombm/stats.hpp"

namespace ombm {

namespace {

constexpr int kExhaustiveCap = 6;
constexpr int kEnumerateCap = 3;

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

int run_family(int n, const std::vector<int>& pi, const std::vector<int>& sigma,
               const PreferenceMatrix& prefs, std::vector<char>& free_scratch) {
  free_scratch.assign(static_cast<std::size_t>(n), 1);
  int cost = 0;
  for (int t = 0; t < n; ++t) {
    const int j = sigma[static_cast<std::size_t>(t)];
    if (j < n - 1) {
      const int partner = pi[static_cast<std::size_t>(j)];
      if (free_scratch[static_cast<std::size_t>(partner)]) {
        free_scratch[static_cast<std::size_t>(partner)] = 0;
        continue;
      }
    }
    ++cost;
    for (int i : prefs.row(j)) {
      if (free_scratch[static_cast<std::size_t>(i)]) {
        free_scratch[static_cast<std::size_t>(i)] = 0;
        break;
      }
    }
  }
  return cost;
}

}  // namespace

int zero_first_family_cost(int n, const std::vector<int>& pi,
                           const std::vector<int>& sigma,
                           const PreferenceMatrix& prefs) {
  if (static_cast<int>(pi.size()) != n || !is_permutation(pi) ||
      static_cast<int>(sigma.size()) != n || !is_permutation(sigma)) {
    throw InvalidParameterError(
        "pi and sigma must both be permutations of {0, ..., n-1}");
  }
  if (prefs.n() != n) {
    throw InvalidParameterError("preference matrix size mismatch");
  }
  std::vector<char> scratch;
  return run_family(n, pi, sigma, prefs, scratch);
}

YaoResult yao_expected_cost(int n, const PreferenceMatrix& prefs,
                            const YaoMode& mode) {
  if (n < 1) {
    throw InvalidParameterError("n must be >= 1, got " + std::to_string(n));
  }
  if (prefs.n() != n) {
    throw InvalidParameterError("preference matrix has size " +
                                std::to_string(prefs.n()) + "; expected " +
                                std::to_string(n));
  }

  std::vector<char> scratch;
  if (mode.kind == YaoMode::Kind::exhaustive) {
    if (n > kExhaustiveCap) {
      throw ResourceLimitError("exhaustive lower-bound evaluation capped at n <= " +
                               std::to_string(kExhaustiveCap) + "; got n=" +
                               std::to_string(n));
    }
    std::uint64_t total = 0;
    std::vector<int> pi(static_cast<std::size_t>(n));
    std::vector<int> sigma(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pi[static_cast<std::size_t>(i)] = i;
    do {
      for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i;
      do {
        total += static_cast<std::uint64_t>(
            run_family(n, pi, sigma, prefs, scratch));
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    } while (std::next_permutation(pi.begin(), pi.end()));
    const std::uint64_t pairs = factorial_u64(n) * factorial_u64(n);
    Rational mean(static_cast<unsigned long>(total),
                  static_cast<unsigned long>(pairs));
    mean.canonicalize();
    return YaoResult{std::move(mean), true, 0.0, pairs};
  }

  if (mode.trials < 1) {
    throw InvalidParameterError("sampled mode needs trials >= 1");
  }
  std::uint64_t total = 0;
  for (std::uint64_t t = 0; t < mode.trials; ++t) {
    Rng rng = Rng::substream(mode.seed, t);
    const std::vector<int> pi = random_permutation(n, rng);
    const std::vector<int> sigma = random_permutation(n, rng);
    total +=
        static_cast<std::uint64_t>(run_family(n, pi, sigma, prefs, scratch));
  }
  Rational mean(static_cast<unsigned long>(total),
                static_cast<unsigned long>(mode.trials));
  mean.canonicalize();
  // Costs live in [1, n], so the interval width is n - 1.
  const double width = hoeffding_half_width(n - 1.0, mode.trials);
  return YaoResult{std::move(mean), false, width, mode.trials};
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> result;
  do {
    result.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

std::vector<PreferenceMatrix> enumerate_preference_matrices(int n) {
  if (n < 1) {
    throw InvalidParameterError("n must be >= 1, got " + std::to_string(n));
  }
  if (n > kEnumerateCap) {
    throw ResourceLimitError(
        "preference-matrix enumeration capped at n <= " +
        std::to_string(kEnumerateCap) + "; got n=" + std::to_string(n));
  }
  const std::vector<std::vector<int>> perms = all_permutations(n);
  const std::size_t base = perms.size();
  std::vector<PreferenceMatrix> matrices;
  std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<std::vector<int>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (std::size_t digit : digits) rows.push_back(perms[digit]);
    matrices.emplace_back(std::move(rows));
    int pos = n - 1;
    while (pos >= 0) {
      auto& digit = digits[static_cast<std::size_t>(pos)];
      if (++digit < base) break;
      digit = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return matrices;
}

}  // namespace ombm
