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

#include <span>
#include <vector>

#include "boardforge/games/mastermind.hpp"

namespace boardforge::ai {

struct Clue {
  games::mastermind::Code guess{};
  games::mastermind::Feedback feedback;
};

// Indices (into all_codes()) of every secret consistent with the clues.
std::vector<int> consistent_codes(std::span<const Clue> history);

// Knuth's minimax rule: the guess whose worst feedback class leaves the
// fewest candidates; ties prefer candidates, then the lower code. Throws
// Error(kInconsistentHistory) when no secret fits the history.
games::mastermind::Code knuth_next_guess(std::span<const Clue> history);

}  // namespace boardforge::ai
