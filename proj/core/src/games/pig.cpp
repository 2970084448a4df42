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

#include "boardforge/games/pig.hpp"

#include <string>

namespace boardforge::games::pig {

Events roll_with(State& state, int die) {
  Events events{{"dice", {{"value", die}}}};
  if (die == 1) {
    events.push_back({"pig_out", {{"seat", state.to_move}, {"lost", state.turn_total}}});
    state.turn_total = 0;
    state.to_move = 1 - state.to_move;
  } else {
    state.turn_total += die;
  }
  return events;
}

Events roll(State& state, engine::Rng& rng) {
  return roll_with(state, static_cast<int>(rng.below(kDieFaces)) + 1);
}

Events hold(State& state) {
  const int seat = state.to_move;
  auto& score = state.scores[static_cast<std::size_t>(seat)];
  score += state.turn_total;
  Events events{{"bank", {{"seat", seat}, {"amount", state.turn_total}, {"score", score}}}};
  state.turn_total = 0;
  if (score < kTarget) state.to_move = 1 - seat;
  return events;
}

std::optional<int> winner(const State& state) {
  for (int seat = 0; seat < 2; ++seat) {
    if (state.scores[static_cast<std::size_t>(seat)] >= kTarget) return seat;
  }
  return std::nullopt;
}

State Rules::initial(int, engine::Rng&) const { return State{}; }

std::optional<int> Rules::mover(const State& state) const {
  if (winner(state)) return std::nullopt;
  return state.to_move;
}

std::vector<std::string> Rules::legal(const State&, int) const {
  return {"hold", "roll"};
}

Events Rules::play(State& state, int, std::string_view token,
                   engine::Rng& rng) const {
  if (token == "roll") return roll(state, rng);
  if (token == "hold") return hold(state);
  bad_token("Pig", token);
}

std::optional<Result> Rules::result(const State& state) const {
  auto w = winner(state);
  if (!w) return std::nullopt;
  return winner_result(2, w, {double(state.scores[0]), double(state.scores[1])});
}

Json Rules::view(const State& state, std::optional<int>) const {
  return {{"scores", state.scores},
          {"turn_total", state.turn_total},
          {"to_move", state.to_move},
          {"target", kTarget}};
}

std::optional<State> Rules::from_view(const Json& view) const {
  State s;
  s.scores = view.at("scores").get<std::array<int, 2>>();
  s.turn_total = view.at("turn_total").get<int>();
  s.to_move = view.at("to_move").get<int>();
  return s;
}

}  // namespace boardforge::games::pig
