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

#include <span>
#include <vector>

#include "ombm/instance.hpp"
#include "ombm/rng.hpp"

namespace ombm {

/// Deterministic-greedy tie-break table: row j is the order in which the
/// algorithm probes L-vertices when the arrival labeled v_j shows up.
class PreferenceMatrix {
 public:
  explicit PreferenceMatrix(std::vector<std::vector<int>> rows);

  static PreferenceMatrix identity(int n);
  static PreferenceMatrix sampled(int n, Rng& rng);

  int n() const noexcept { return static_cast<int>(rows_.size()); }
  std::span<const int> row(int j) const {
    return rows_[static_cast<std::size_t>(j)];
  }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  bool operator==(const PreferenceMatrix&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Stable-partitions each row so the arrival's zero-cost neighbors lead,
/// preserving relative order inside both groups. run_dg already takes a free
/// zero edge whenever one exists, so this normalization does not change its
/// behavior; it makes the matrix state that behavior explicitly.
/// Uniform metric only.
PreferenceMatrix canonicalize_zero_first(const PreferenceMatrix& prefs,
                                         const Instance& instance);

}  // namespace ombm
