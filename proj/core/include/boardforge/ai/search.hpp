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
#include <functional>
#include <string>

#include "boardforge/engine/rules.hpp"

namespace boardforge::ai {

// Static evaluation from `seat`'s point of view.
using EvalFn = std::function<double(const engine::GameState& state, int seat)>;

// Terminal positions score +/- kWinScore (0 for a draw).
inline constexpr double kWinScore = 1e9;

struct SearchResult {
  double value = 0.0;
  std::string move;
  std::uint64_t nodes = 0;  // every position visited, root included
};

// Depth-limited alpha-beta for deterministic perfect-information games.
// Values are from the point of view of the seat to move at the root; a seat
// that moves again (Kalah extra turns) keeps maximising. Moves are searched
// in lexicographic token order and only a strictly better value replaces the
// current best, so the chosen move matches plain minimax under the same
// tie-breaking. Requires depth >= 1 and a non-terminal root.
SearchResult alphabeta(const engine::GameRules& rules,
                       const engine::GameState& root, int depth,
                       const EvalFn& eval);

// Value of a finished position for `seat` on the kWinScore scale.
double terminal_value(const engine::Result& result, int seat);

}  // namespace boardforge::ai
