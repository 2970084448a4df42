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

#include "boardforge/games/nothanks.hpp"

#include <algorithm>
#include <numeric>

namespace boardforge::games::nothanks {

int starting_chips(int seats) {
  if (seats <= 5) return 11;
  return seats == 6 ? 9 : 7;
}

int score(std::span<const int> cards, int chips) {
  std::vector<int> sorted_cards(cards.begin(), cards.end());
  std::sort(sorted_cards.begin(), sorted_cards.end());
  int total = 0;
  for (std::size_t i = 0; i < sorted_cards.size(); ++i) {
    if (i == 0 || sorted_cards[i] != sorted_cards[i - 1] + 1) total += sorted_cards[i];
  }
  return total - chips;
}

Events take(State& state) {
  const int seat = state.to_move;
  Hand& hand = state.hands[static_cast<std::size_t>(seat)];
  const int card = *state.face_up;
  hand.cards.insert(std::upper_bound(hand.cards.begin(), hand.cards.end(), card), card);
  hand.chips += state.pot;
  Events events{{"take", {{"seat", seat}, {"card", card}, {"chips", state.pot}}}};
  state.pot = 0;
  if (state.deck.empty()) {
    state.face_up.reset();
  } else {
    state.face_up = state.deck.back();
    state.deck.pop_back();
    events.push_back({"reveal", {{"card", *state.face_up}}});
  }
  return events;
}

Events pay(State& state) {
  const int seat = state.to_move;
  Hand& hand = state.hands[static_cast<std::size_t>(seat)];
  if (hand.chips == 0) illegal("no chips left: the card must be taken");
  --hand.chips;
  ++state.pot;
  state.to_move = (seat + 1) % static_cast<int>(state.hands.size());
  return {{"pay", {{"seat", seat}, {"pot", state.pot}}}};
}

int total_chips(const State& state) {
  int total = state.pot;
  for (const Hand& h : state.hands) total += h.chips;
  return total;
}

State Rules::initial(int seats, engine::Rng& rng) const {
  std::vector<int> cards(kHighCard - kLowCard + 1);
  std::iota(cards.begin(), cards.end(), kLowCard);
  engine::shuffle(std::span<int>(cards), rng);

  State s;
  s.removed.assign(cards.begin(), cards.begin() + kRemovedCards);
  std::sort(s.removed.begin(), s.removed.end());
  s.deck.assign(cards.begin() + kRemovedCards, cards.end());
  s.face_up = s.deck.back();
  s.deck.pop_back();
  s.hands.assign(static_cast<std::size_t>(seats), Hand{{}, starting_chips(seats)});
  return s;
}

std::optional<int> Rules::mover(const State& state) const {
  if (!state.face_up) return std::nullopt;
  return state.to_move;
}

std::vector<std::string> Rules::legal(const State& state, int seat) const {
  if (state.hands[static_cast<std::size_t>(seat)].chips > 0) return {"pay", "take"};
  return {"take"};
}

Events Rules::play(State& state, int, std::string_view token,
                   engine::Rng&) const {
  if (token == "take") return take(state);
  if (token == "pay") return pay(state);
  bad_token("No Thanks!", token);
}

std::optional<Result> Rules::result(const State& state) const {
  if (state.face_up) return std::nullopt;
  std::vector<double> scores;
  for (const Hand& h : state.hands) scores.push_back(score(h.cards, h.chips));
  return lowest_score_result(scores);
}

Json Rules::view(const State& state, std::optional<int>) const {
  Json players = Json::array();
  for (const Hand& h : state.hands) {
    players.push_back({{"cards", h.cards},
                       {"chips", h.chips},
                       {"provisional", score(h.cards, h.chips)}});
  }
  return {{"face_up", state.face_up ? Json(*state.face_up) : Json(nullptr)},
          {"pot", state.pot},
          {"cards_remaining", state.deck.size()},
          {"players", players},
          {"to_move", state.to_move}};
}

}  // namespace boardforge::games::nothanks
