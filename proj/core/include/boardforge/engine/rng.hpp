// Copyright 2026 The Boardforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace boardforge::engine {

// xorshift64* generator. The output stream is a pure function of the seed
// and is identical on every platform, which is what makes replay-based save
// files portable.
class Rng {
 public:
  static constexpr std::uint64_t kZeroSeedReplacement = 0x9E3779B97F4A7C15ULL;
  static constexpr std::uint64_t kMultiplier = 2685821657736338717ULL;

  explicit Rng(std::uint64_t seed)
      : state_(seed == 0 ? kZeroSeedReplacement : seed) {}

  std::uint64_t next() {
    std::uint64_t x = state_;
    x ^= x >> 12;
    x ^= x << 25;
    x ^= x >> 27;
    state_ = x;
    return x * kMultiplier;
  }

  // Uniform integer in [0, n) by rejection on the top 32 bits of next().
  // Requires 1 <= n <= 2^32; throws Error(kInvalidArgument) otherwise.
  std::uint32_t below(std::uint64_t n);

  std::uint64_t state() const { return state_; }

  friend bool operator==(const Rng&, const Rng&) = default;

 private:
  std::uint64_t state_;
};

// Fisher-Yates from the back: for i = n-1 .. 1 swap(i, below(i + 1)).
template <typename T>
void shuffle(std::span<T> items, Rng& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = rng.below(i);
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace boardforge::engine
