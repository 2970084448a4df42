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

#include "boardforge/ai/eval.hpp"

#include <algorithm>

#include "boardforge/ai/knuth.hpp"
#include "boardforge/games/blackbox.hpp"
#include "boardforge/games/kalah.hpp"
#include "boardforge/games/mastermind.hpp"
#include "boardforge/games/nothanks.hpp"
#include "boardforge/games/othello.hpp"
#include "boardforge/games/pig.hpp"
#include "boardforge/games/pushfight.hpp"

namespace boardforge::ai {
namespace {

template <typename S>
const S* as(const engine::GameState& state) {
  const auto* typed = dynamic_cast<const engine::StateOf<S>*>(&state);
  return typed ? &typed->value : nullptr;
}

int pushfight_mobility(games::pushfight::State state, int seat) {
  state.to_move = seat;
  int mobility = 0;
  for (int cell = 0; cell < games::pushfight::kCells; ++cell) {
    const auto& piece = state.board[static_cast<std::size_t>(cell)];
    if (piece && piece->owner == seat) {
      mobility += static_cast<int>(games::pushfight::slide_targets(state, cell).size());
    }
  }
  return mobility;
}

}  // namespace

double greedy_eval(const engine::GameRules& rules,
                   const engine::GameState& state, int seat) {
  const auto s = static_cast<std::size_t>(seat);
  if (const auto* pig = as<games::pig::State>(state)) {
    return pig->scores[s] + (pig->to_move == seat ? pig->turn_total : 0);
  }
  if (const auto* kalah = as<games::kalah::State>(state)) {
    return kalah->pits[static_cast<std::size_t>(games::kalah::store_index(*kalah, seat))] -
           kalah->pits[static_cast<std::size_t>(games::kalah::store_index(*kalah, 1 - seat))];
  }
  if (const auto* othello = as<games::othello::State>(state)) {
    using games::othello::disc_of;
    return games::othello::count(othello->board, disc_of(seat)) -
           games::othello::count(othello->board, disc_of(1 - seat));
  }
  if (const auto* nt = as<games::nothanks::State>(state)) {
    const auto& hand = nt->hands[s];
    return -games::nothanks::score(hand.cards, hand.chips);
  }
  if (const auto* pf = as<games::pushfight::State>(state)) {
    const int own = games::pushfight::piece_count(*pf, seat);
    const int other = games::pushfight::piece_count(*pf, 1 - seat);
    return (own - other) * 100.0 + pushfight_mobility(*pf, seat);
  }
  if (const auto* mm = as<games::mastermind::State>(state)) {
    std::vector<Clue> clues;
    for (const auto& row : mm->rows) clues.push_back({row.guess, row.result});
    return -static_cast<double>(consistent_codes(clues).size());
  }
  if (const auto* bb = as<games::blackbox::State>(state)) {
    double spent = 0;
    for (const auto& round : bb->rounds) {
      if (round.seeker != seat) continue;
      for (const auto& shot : round.shots) {
        spent += shot.outcome.kind == games::blackbox::RayKind::kExit ? 2 : 1;
      }
    }
    return -spent;
  }
  engine::fail(engine::ErrorCode::kInvalidArgument,
               "no heuristic for game '" + std::string(rules.id()) + "'");
}

}  // namespace boardforge::ai
