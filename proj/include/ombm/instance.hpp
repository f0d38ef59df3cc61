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
#include <span>
#include <utility>
#include <vector>

#include "ombm/rational.hpp"

namespace ombm {

enum class Metric { uniform, general };

/// Bipartite cost structure over offline points L and arriving points R,
/// |L| = |R| = n, indexed 0-based. Immutable after construction; safe to
/// share across workers.
///
/// Uniform-metric instances hold only the zero-edge adjacency (every other
/// entry is an implicit 1); general-metric instances hold the dense rational
/// matrix. Both expose the same exact cost(i, j) accessor.
class Instance {
 public:
  static Instance uniform_from_zero_edges(
      int n, const std::vector<std::pair<int, int>>& zero_edges);
  static Instance uniform_from_costs(int n,
                                     const std::vector<Rational>& row_major);
  static Instance general_from_costs(int n, std::vector<Rational> row_major);

  int n() const noexcept { return n_; }
  Metric metric() const noexcept { return metric_; }
  bool is_uniform() const noexcept { return metric_ == Metric::uniform; }

  /// d(i, j) with i in L and j in R.
  const Rational& cost(int i, int j) const;
  bool zero_edge(int i, int j) const;

  /// L-vertices at distance zero from arrival j, ascending.
  std::span<const int> zero_neighbors(int j) const {
    return zero_adj_[static_cast<std::size_t>(j)];
  }

  std::int64_t zero_edge_count() const noexcept { return zero_count_; }

 private:
  Instance(int n, Metric metric) : n_(n), metric_(metric) {}
  void build_zero_adjacency();

  int n_;
  Metric metric_;
  std::vector<Rational> costs_;             // general metric only, row-major
  std::vector<std::vector<int>> zero_adj_;  // indexed by R-vertex, sorted
  std::int64_t zero_count_ = 0;
};

/// Example 1: d(i, j) = 0 iff i = j < n-1. Offline optimum is 1 for every n.
Instance make_example1(int n);

/// Zero diagonal on the first k indices, ones elsewhere. Offline optimum n-k.
Instance make_uniform_k(int n, int k);

/// Lower-bound family: zero edges exactly (pi[i], i) for i < n-1.
Instance make_family_instance(int n, const std::vector<int>& pi);

/// Re-checks every structural invariant, throwing ValidationError that names
/// the first offending coordinate. Meant for deserialized input.
void validate(const Instance& instance);

bool is_permutation(const std::vector<int>& values);

}  // namespace ombm
