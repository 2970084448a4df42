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

#include "boardforge/ai/knuth.hpp"

#include <array>
#include <cstdint>
#include <limits>

namespace boardforge::ai {
namespace mm = games::mastermind;
namespace {

constexpr int kClasses = (mm::kPegs + 1) * (mm::kPegs + 1);

int class_of(const mm::Feedback& fb) { return fb.black * (mm::kPegs + 1) + fb.white; }

// feedback class for every (secret, guess) pair.
const std::vector<std::uint8_t>& feedback_table() {
  static const std::vector<std::uint8_t> table = [] {
    const auto& codes = mm::all_codes();
    std::vector<std::uint8_t> out(static_cast<std::size_t>(mm::kCodeCount) * mm::kCodeCount);
    for (int s = 0; s < mm::kCodeCount; ++s) {
      for (int g = 0; g < mm::kCodeCount; ++g) {
        out[static_cast<std::size_t>(s) * mm::kCodeCount + static_cast<std::size_t>(g)] =
            static_cast<std::uint8_t>(class_of(mm::feedback(codes[static_cast<std::size_t>(s)],
                                                            codes[static_cast<std::size_t>(g)])));
      }
    }
    return out;
  }();
  return table;
}

}  // namespace

std::vector<int> consistent_codes(std::span<const Clue> history) {
  const auto& table = feedback_table();
  std::vector<int> out;
  for (int s = 0; s < mm::kCodeCount; ++s) {
    bool fits = true;
    for (const Clue& clue : history) {
      const int g = mm::code_index(clue.guess);
      if (table[static_cast<std::size_t>(s) * mm::kCodeCount + static_cast<std::size_t>(g)] !=
          class_of(clue.feedback)) {
        fits = false;
        break;
      }
    }
    if (fits) out.push_back(s);
  }
  return out;
}

mm::Code knuth_next_guess(std::span<const Clue> history) {
  const auto& codes = mm::all_codes();
  const std::vector<int> candidates = consistent_codes(history);
  if (candidates.empty()) {
    engine::fail(engine::ErrorCode::kInconsistentHistory,
                 "no secret is consistent with the feedback so far");
  }
  if (candidates.size() == 1) return codes[static_cast<std::size_t>(candidates.front())];

  std::vector<bool> is_candidate(mm::kCodeCount, false);
  for (int c : candidates) is_candidate[static_cast<std::size_t>(c)] = true;

  const auto& table = feedback_table();
  int best_guess = -1;
  int best_worst = std::numeric_limits<int>::max();
  bool best_is_candidate = false;
  for (int g = 0; g < mm::kCodeCount; ++g) {
    std::array<int, kClasses> sizes{};
    for (int s : candidates) {
      ++sizes[table[static_cast<std::size_t>(s) * mm::kCodeCount + static_cast<std::size_t>(g)]];
    }
    int worst = 0;
    for (int n : sizes) worst = std::max(worst, n);
    const bool candidate = is_candidate[static_cast<std::size_t>(g)];
    if (worst < best_worst || (worst == best_worst && candidate && !best_is_candidate)) {
      best_guess = g;
      best_worst = worst;
      best_is_candidate = candidate;
    }
  }
  return codes[static_cast<std::size_t>(best_guess)];
}

}  // namespace boardforge::ai
