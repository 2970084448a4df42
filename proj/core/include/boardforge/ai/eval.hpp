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

#include "boardforge/engine/rules.hpp"

namespace boardforge::ai {

// Fixed one-number heuristic per game, from `seat`'s point of view:
// Pig banked score plus turn total, Kalah store difference, Othello disc
// difference, No Thanks! negated provisional score, Push Fight piece
// difference times 100 plus slide mobility, Mastermind negated number of
// consistent secrets, Black Box negated shot cost.
double greedy_eval(const engine::GameRules& rules,
                   const engine::GameState& state, int seat);

}  // namespace boardforge::ai
