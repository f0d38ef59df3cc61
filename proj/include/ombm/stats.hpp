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

#include <cmath>
#include <cstdint>

namespace ombm {

/// Compensated accumulator. The summation order is part of the
/// reproducibility contract, so callers add values in a fixed order.
class KahanSum {
 public:
  void add(double x) noexcept {
    const double y = x - compensation_;
    const double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }

  double value() const noexcept { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// 97.5th percentile of the standard normal; two-sided 95% interval.
inline constexpr double kNormal975 = 1.959963984540054;

inline double normal_ci_half_width(double sum, double sum_sq,
                                   std::uint64_t trials) {
  if (trials < 2) return 0.0;
  const double t = static_cast<double>(trials);
  double variance = (sum_sq - sum * sum / t) / (t - 1.0);
  if (variance < 0.0) variance = 0.0;  // rounding guard
  return kNormal975 * std::sqrt(variance / t);
}

/// Two-sided Hoeffding half-width at confidence 1-delta for samples confined
/// to an interval of the given width. Distribution-free.
inline double hoeffding_half_width(double range, std::uint64_t trials,
                                   double delta = 0.05) {
  if (trials == 0 || range <= 0.0) return 0.0;
  return range *
         std::sqrt(std::log(2.0 / delta) / (2.0 * static_cast<double>(trials)));
}

}  // namespace ombm
