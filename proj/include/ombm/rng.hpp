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

#include <cassert>
#include <cstdint>
#include <vector>

namespace ombm {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

/// splitmix64 finalizer; bijective avalanche on 64-bit words.
inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based stream derivation: stream `salt` of `master`. Substreams of
/// one master never coincide, and the finalizer decorrelates neighbors.
inline constexpr std::uint64_t derive_seed(std::uint64_t master,
                                           std::uint64_t salt) noexcept {
  return mix64(master + kGolden * (salt + 1));
}

class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}
  constexpr std::uint64_t next() noexcept { return mix64(state_ += kGolden); }

 private:
  std::uint64_t state_;
};

/// xoshiro256**. A fixed algorithm so streams are identical on every
/// platform; std:: engines and distributions are avoided for that reason.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) noexcept {
    SplitMix64 expander(seed);
    for (auto& word : state_) word = expander.next();
  }

  /// Per-trial substream of a master seed.
  static Rng substream(std::uint64_t master_seed, std::uint64_t index) noexcept {
    return Rng(derive_seed(master_seed, index));
  }

  std::uint64_t next() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Unbiased draw from [0, bound), bound >= 1, by rejection.
  std::uint64_t below(std::uint64_t bound) noexcept {
    assert(bound >= 1);
    const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      const std::uint64_t word = next();
      if (word >= threshold) return word % bound;
    }
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t state_[4];
};

/// In-place Fisher-Yates; exactly uniform over permutations.
template <class T>
void shuffle(std::vector<T>& values, Rng& rng) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.below(i));
    std::swap(values[i - 1], values[j]);
  }
}

inline std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  shuffle(perm, rng);
  return perm;
}

}  // namespace ombm
