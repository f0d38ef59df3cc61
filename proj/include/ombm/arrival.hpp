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

#include <optional>
#include <vector>

#include "ombm/rng.hpp"

namespace ombm {

/// A permutation of the arriving side R: sequence[t] is the label of the
/// t-th arrival.
class ArrivalOrder {
 public:
  explicit ArrivalOrder(std::vector<int> sequence);

  static ArrivalOrder identity(int n);
  /// v_{n-1} first, then v_0, ..., v_{n-2}. The adversarial order used by
  /// the deterministic-greedy cascade.
  static ArrivalOrder last_first(int n);
  static ArrivalOrder sampled(int n, Rng& rng);

  int size() const noexcept { return static_cast<int>(sequence_.size()); }
  int at(int t) const { return sequence_[static_cast<std::size_t>(t)]; }
  const std::vector<int>& sequence() const noexcept { return sequence_; }

  bool operator==(const ArrivalOrder&) const = default;

 private:
  std::vector<int> sequence_;
};

/// Either a uniformly random permutation per trial, or one fixed order.
class ArrivalModel {
 public:
  static ArrivalModel random_order() { return ArrivalModel(); }
  static ArrivalModel fixed(ArrivalOrder order) {
    ArrivalModel model;
    model.order_ = std::move(order);
    return model;
  }

  bool is_random_order() const noexcept { return !order_.has_value(); }
  const ArrivalOrder& fixed_order() const { return *order_; }

 private:
  ArrivalModel() = default;
  std::optional<ArrivalOrder> order_;
};

}  // namespace ombm
