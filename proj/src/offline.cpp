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

#include "ombm/offline.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <utility>

#include "ombm/errors.hpp"

namespace ombm {

namespace {

struct HungarianResult {
  Rational cost;
  std::vector<int> match_l;  // L -> R
  std::vector<Rational> u;   // row potentials, 0-based
  std::vector<Rational> v;   // column potentials, 0-based
};

// Potentials method over exact rationals, 1-based internally with the usual
// virtual column 0. Unset minv entries stand for +infinity.
HungarianResult hungarian(const Instance& instance) {
  const int n = instance.n();
  std::vector<int> p(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> way(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Rational> u(static_cast<std::size_t>(n) + 1);
  std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
  std::vector<std::optional<Rational>> minv(static_cast<std::size_t>(n) + 1);
  std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);

  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), std::nullopt);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      const int i0 = p[static_cast<std::size_t>(j0)];
      int j1 = 0;
      std::optional<Rational> delta;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        Rational cur = instance.cost(i0 - 1, j - 1) -
                       u[static_cast<std::size_t>(i0)] -
                       v[static_cast<std::size_t>(j)];
        auto& mj = minv[static_cast<std::size_t>(j)];
        if (!mj || cur < *mj) {
          mj = std::move(cur);
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (!delta || *mj < *delta) {
          delta = *mj;
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += *delta;
          v[static_cast<std::size_t>(j)] -= *delta;
        } else if (minv[static_cast<std::size_t>(j)]) {
          *minv[static_cast<std::size_t>(j)] -= *delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<std::size_t>(j0)] != 0);
    do {
      const int j1 = way[static_cast<std::size_t>(j0)];
      p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0 != 0);
  }

  HungarianResult result;
  result.match_l.assign(static_cast<std::size_t>(n), -1);
  result.cost = 0;
  for (int j = 1; j <= n; ++j) {
    const int i = p[static_cast<std::size_t>(j)];
    result.match_l[static_cast<std::size_t>(i - 1)] = j - 1;
    result.cost += instance.cost(i - 1, j - 1);
  }
  result.u.assign(u.begin() + 1, u.end());
  result.v.assign(v.begin() + 1, v.end());
  return result;
}

// Kuhn augmentation inside an unweighted bipartite graph, skipping blocked
// columns.
bool augment(const std::vector<std::vector<int>>& adj, int row,
             const std::vector<char>& col_blocked, std::vector<char>& visited,
             std::vector<int>& match_l, std::vector<int>& match_r) {
  for (int j : adj[static_cast<std::size_t>(row)]) {
    if (col_blocked[static_cast<std::size_t>(j)] ||
        visited[static_cast<std::size_t>(j)]) {
      continue;
    }
    visited[static_cast<std::size_t>(j)] = 1;
    const int other = match_r[static_cast<std::size_t>(j)];
    if (other == -1 ||
        augment(adj, other, col_blocked, visited, match_l, match_r)) {
      match_r[static_cast<std::size_t>(j)] = row;
      match_l[static_cast<std::size_t>(row)] = j;
      return true;
    }
  }
  return false;
}

// Rewrites match_l into the lexicographically smallest perfect matching of
// the given bipartite graph. Every perfect matching of the graph must be
// admissible (here: tight edges of optimal duals, or zero-maximal matchings).
void lex_min_perfect_matching(const std::vector<std::vector<int>>& adj,
                              std::vector<int>& match_l) {
  const int n = static_cast<int>(match_l.size());
  std::vector<int> match_r(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    match_r[static_cast<std::size_t>(match_l[static_cast<std::size_t>(i)])] = i;
  }
  std::vector<char> col_fixed(static_cast<std::size_t>(n), 0);
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j : adj[static_cast<std::size_t>(i)]) {
      if (col_fixed[static_cast<std::size_t>(j)]) continue;
      if (match_l[static_cast<std::size_t>(i)] == j) break;  // already minimal
      // Hand column j to row i and rematch the displaced row; on failure the
      // swap is undone and the next candidate is tried.
      const int displaced = match_r[static_cast<std::size_t>(j)];
      const int old_column = match_l[static_cast<std::size_t>(i)];
      match_l[static_cast<std::size_t>(i)] = j;
      match_r[static_cast<std::size_t>(j)] = i;
      match_l[static_cast<std::size_t>(displaced)] = -1;
      match_r[static_cast<std::size_t>(old_column)] = -1;
      std::fill(visited.begin(), visited.end(), 0);
      visited[static_cast<std::size_t>(j)] = 1;
      if (augment(adj, displaced, col_fixed, visited, match_l, match_r)) {
        break;
      }
      match_l[static_cast<std::size_t>(i)] = old_column;
      match_r[static_cast<std::size_t>(old_column)] = i;
      match_l[static_cast<std::size_t>(displaced)] = j;
      match_r[static_cast<std::size_t>(j)] = displaced;
    }
    col_fixed[static_cast<std::size_t>(match_l[static_cast<std::size_t>(i)])] =
        1;
  }
}

// Maximum matching over zero-cost edges, restricted to rows >= row_start and
// unblocked columns. Deterministic ascending scan.
int max_zero_matching(const Instance& instance, int row_start,
                      const std::vector<char>& col_blocked) {
  const int n = instance.n();
  std::vector<int> match_row(static_cast<std::size_t>(n), -1);  // row -> col
  std::vector<char> visited(static_cast<std::size_t>(n), 0);
  int size = 0;
  // DFS from columns; adjacency is the per-column zero neighbor list.
  auto try_column = [&](auto&& self, int j) -> bool {
    for (int i : instance.zero_neighbors(j)) {
      if (i < row_start || visited[static_cast<std::size_t>(i)]) continue;
      visited[static_cast<std::size_t>(i)] = 1;
      const int current = match_row[static_cast<std::size_t>(i)];
      if (current == -1 || self(self, current)) {
        match_row[static_cast<std::size_t>(i)] = j;
        return true;
      }
    }
    return false;
  };
  for (int j = 0; j < n; ++j) {
    if (col_blocked[static_cast<std::size_t>(j)]) continue;
    std::fill(visited.begin(), visited.end(), 0);
    if (try_column(try_column, j)) ++size;
  }
  return size;
}

}  // namespace

OptResult solve_assignment(const Instance& instance) {
  HungarianResult base = hungarian(instance);
  // Every optimal matching is tight for the optimal duals, and every perfect
  // matching of the tight graph is optimal; the lexicographic tie-break runs
  // inside that graph.
  const int n = instance.n();
  std::vector<std::vector<int>> tight(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (instance.cost(i, j) == base.u[static_cast<std::size_t>(i)] +
                                     base.v[static_cast<std::size_t>(j)]) {
        tight[static_cast<std::size_t>(i)].push_back(j);
      }
    }
  }
  lex_min_perfect_matching(tight, base.match_l);
  return OptResult{std::move(base.cost), std::move(base.match_l)};
}

OptResult solve_uniform(const Instance& instance) {
  if (!instance.is_uniform()) {
    throw UnsupportedMetricError(
        "solve_uniform requires a uniform-metric instance");
  }
  const int n = instance.n();
  std::vector<char> col_used(static_cast<std::size_t>(n), 0);
  const int best_zeros = max_zero_matching(instance, 0, col_used);

  // Prefix forcing: give each row the smallest column that still allows a
  // maximum number of zero edges overall.
  std::vector<int> matching(static_cast<std::size_t>(n), -1);
  int fixed_zeros = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (col_used[static_cast<std::size_t>(j)]) continue;
      const int edge_zero = instance.zero_edge(i, j) ? 1 : 0;
      col_used[static_cast<std::size_t>(j)] = 1;
      const int rest = max_zero_matching(instance, i + 1, col_used);
      if (fixed_zeros + edge_zero + rest == best_zeros) {
        matching[static_cast<std::size_t>(i)] = j;
        fixed_zeros += edge_zero;
        break;
      }
      col_used[static_cast<std::size_t>(j)] = 0;
    }
    assert(matching[static_cast<std::size_t>(i)] != -1);
  }
  return OptResult{Rational(n - best_zeros), std::move(matching)};
}

Rational optimal_cost(const Instance& instance) {
  if (instance.is_uniform()) {
    const std::vector<char> no_blocked(
        static_cast<std::size_t>(instance.n()), 0);
    return Rational(instance.n() -
                    max_zero_matching(instance, 0, no_blocked));
  }
  return hungarian(instance).cost;
}

}  // namespace ombm
