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

#include "ombm/prefs.hpp"

#include <string>

#include "ombm/errors.hpp"

namespace ombm {

PreferenceMatrix::PreferenceMatrix(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  const int n = static_cast<int>(rows_.size());
  if (n == 0) {
    throw InvalidParameterError("preference matrix must have n >= 1 rows");
  }
  for (int j = 0; j < n; ++j) {
    const auto& row = rows_[static_cast<std::size_t>(j)];
    if (static_cast<int>(row.size()) != n || !is_permutation(row)) {
      throw InvalidParameterError("preference row " + std::to_string(j) +
                                  " is not a permutation of {0, ..., n-1}");
    }
  }
}

PreferenceMatrix PreferenceMatrix::identity(int n) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (auto& row : rows) {
    row.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = i;
  }
  return PreferenceMatrix(std::move(rows));
}

PreferenceMatrix PreferenceMatrix::sampled(int n, Rng& rng) {
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
  for (auto& row : rows) row = random_permutation(n, rng);
  return PreferenceMatrix(std::move(rows));
}

PreferenceMatrix canonicalize_zero_first(const PreferenceMatrix& prefs,
                                         const Instance& instance) {
  if (!instance.is_uniform()) {
    throw UnsupportedMetricError(
        "canonicalize_zero_first requires a uniform-metric instance");
  }
  if (prefs.n() != instance.n()) {
    throw InvalidParameterError("preference matrix size " +
                                std::to_string(prefs.n()) +
                                " does not match instance size " +
                                std::to_string(instance.n()));
  }
  std::vector<std::vector<int>> rows;
  rows.reserve(static_cast<std::size_t>(prefs.n()));
  for (int j = 0; j < prefs.n(); ++j) {
    std::vector<int> front;
    std::vector<int> rest;
    for (int i : prefs.row(j)) {
      (instance.zero_edge(i, j) ? front : rest).push_back(i);
    }
    front.insert(front.end(), rest.begin(), rest.end());
    rows.push_back(std::move(front));
  }
  return PreferenceMatrix(std::move(rows));
}

}  // namespace ombm
