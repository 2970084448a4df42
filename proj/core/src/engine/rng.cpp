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

#include "boardforge/engine/rng.hpp"

#include <string>

#include "boardforge/engine/error.hpp"

namespace boardforge::engine {

std::uint32_t Rng::below(std::uint64_t n) {
  constexpr std::uint64_t kRange = std::uint64_t{1} << 32;
  if (n == 0 || n > kRange) {
    fail(ErrorCode::kInvalidArgument,
         "Rng::below: n must be in [1, 2^32], got " + std::to_string(n));
  }
  const std::uint64_t limit = kRange - (kRange % n);
  for (;;) {
    const std::uint64_t v = next() >> 32;
    if (v < limit) return static_cast<std::uint32_t>(v % n);
  }
}

}  // namespace boardforge::engine
