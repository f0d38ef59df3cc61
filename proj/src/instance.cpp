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

#include "ombm/instance.hpp"

#include <algorithm>
#include <string>

#include "ombm/errors.hpp"

namespace ombm {

namespace {

const Rational& rational_zero() {
  static const Rational value(0);
  return value;
}

const Rational& rational_one() {
  static const Rational value(1);
  return value;
}

void require_positive_n(int n) {
  if (n < 1) {
    throw InvalidParameterError("instance size must be >= 1, got " +
                                std::to_string(n));
  }
}

std::string coord(int i, int j) {
  return "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

}  // namespace

bool is_permutation(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int v : values) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

Instance Instance::uniform_from_zero_edges(
    int n, const std::vector<std::pair<int, int>>& zero_edges) {
  require_positive_n(n);
  Instance instance(n, Metric::uniform);
  instance.zero_adj_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [i, j] : zero_edges) {
    if (i < 0 || i >= n || j < 0 || j >= n) {
      throw ValidationError("zero edge " + coord(i, j) + " out of range for n=" +
                            std::to_string(n));
    }
    instance.zero_adj_[static_cast<std::size_t>(j)].push_back(i);
  }
  for (auto& column : instance.zero_adj_) {
    std::sort(column.begin(), column.end());
    column.erase(std::unique(column.begin(), column.end()), column.end());
    instance.zero_count_ += static_cast<std::int64_t>(column.size());
  }
  return instance;
}

Instance Instance::uniform_from_costs(int n,
                                      const std::vector<Rational>& row_major) {
  require_positive_n(n);
  const std::size_t expected =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (row_major.size() != expected) {
    throw ValidationError("cost matrix has " +
                          std::to_string(row_major.size()) +
                          " entries; expected " + std::to_string(expected));
  }
  std::vector<std::pair<int, int>> zeros;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& c = row_major[static_cast<std::size_t>(i) *
                                        static_cast<std::size_t>(n) +
                                    static_cast<std::size_t>(j)];
      if (c == 0) {
        zeros.emplace_back(i, j);
      } else if (c != 1) {
        throw ValidationError("costs" + coord(i, j) + " = " +
                              fraction_string(c) +
                              ": uniform metric requires entries in {0, 1}");
      }
    }
  }
  return uniform_from_zero_edges(n, zeros);
}

Instance Instance::general_from_costs(int n, std::vector<Rational> row_major) {
  require_positive_n(n);
  const std::size_t expected =
      static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  if (row_major.size() != expected) {
    throw ValidationError("cost matrix has " +
                          std::to_string(row_major.size()) +
                          " entries; expected " + std::to_string(expected));
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& c = row_major[static_cast<std::size_t>(i) *
                                        static_cast<std::size_t>(n) +
                                    static_cast<std::size_t>(j)];
      if (c < 0) {
        throw ValidationError("costs" + coord(i, j) + " = " +
                              fraction_string(c) + ": entries must be >= 0");
      }
    }
  }
  Instance instance(n, Metric::general);
  instance.costs_ = std::move(row_major);
  instance.build_zero_adjacency();
  return instance;
}

void Instance::build_zero_adjacency() {
  zero_adj_.assign(static_cast<std::size_t>(n_), {});
  zero_count_ = 0;
  for (int j = 0; j < n_; ++j) {
    for (int i = 0; i < n_; ++i) {
      if (costs_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                 static_cast<std::size_t>(j)] == 0) {
        zero_adj_[static_cast<std::size_t>(j)].push_back(i);
        ++zero_count_;
      }
    }
  }
}

const Rational& Instance::cost(int i, int j) const {
  if (metric_ == Metric::general) {
    return costs_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
                  static_cast<std::size_t>(j)];
  }
  return zero_edge(i, j) ? rational_zero() : rational_one();
}

bool Instance::zero_edge(int i, int j) const {
  const auto& column = zero_adj_[static_cast<std::size_t>(j)];
  return std::binary_search(column.begin(), column.end(), i);
}

Instance make_example1(int n) {
  require_positive_n(n);
  return make_uniform_k(n, n - 1);
}

Instance make_uniform_k(int n, int k) {
  require_positive_n(n);
  if (k < 0 || k > n) {
    throw InvalidParameterError("k must satisfy 0 <= k <= n; got k=" +
                                std::to_string(k) + ", n=" + std::to_string(n));
  }
  std::vector<std::pair<int, int>> zeros;
  zeros.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) zeros.emplace_back(i, i);
  return Instance::uniform_from_zero_edges(n, zeros);
}

Instance make_family_instance(int n, const std::vector<int>& pi) {
  require_positive_n(n);
  if (static_cast<int>(pi.size()) != n || !is_permutation(pi)) {
    throw InvalidParameterError(
        "pi must be a permutation of {0, ..., n-1} with n=" +
        std::to_string(n));
  }
  std::vector<std::pair<int, int>> zeros;
  zeros.reserve(static_cast<std::size_t>(n > 0 ? n - 1 : 0));
  for (int i = 0; i + 1 < n; ++i) {
    zeros.emplace_back(pi[static_cast<std::size_t>(i)], i);
  }
  return Instance::uniform_from_zero_edges(n, zeros);
}

void validate(const Instance& instance) {
  const int n = instance.n();
  if (n < 1) {
    throw ValidationError("instance size must be >= 1, got " +
                          std::to_string(n));
  }
  for (int j = 0; j < n; ++j) {
    int previous = -1;
    for (int i : instance.zero_neighbors(j)) {
      if (i < 0 || i >= n) {
        throw ValidationError("zero edge " + coord(i, j) +
                              " out of range for n=" + std::to_string(n));
      }
      if (i <= previous) {
        throw ValidationError("zero adjacency for arrival " +
                              std::to_string(j) + " is not strictly ascending");
      }
      previous = i;
    }
  }
  if (!instance.is_uniform()) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (instance.cost(i, j) < 0) {
          throw ValidationError("costs" + coord(i, j) + " = " +
                                fraction_string(instance.cost(i, j)) +
                                ": entries must be >= 0");
        }
      }
    }
  }
}

}  // namespace ombm
