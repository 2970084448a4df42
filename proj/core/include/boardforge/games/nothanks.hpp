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

#include <optional>
#include <span>
#include <vector>

#include "boardforge/games/common.hpp"

namespace boardforge::games::nothanks {

inline constexpr int kLowCard = 3;
inline constexpr int kHighCard = 35;
inline constexpr int kRemovedCards = 9;
inline constexpr int kDeckSize = kHighCard - kLowCard + 1 - kRemovedCards;

int starting_chips(int seats);

struct Hand {
  std::vector<int> cards;  // ascending
  int chips = 0;

  friend bool operator==(const Hand&, const Hand&) = default;
};

struct State {
  std::vector<int> deck;     // hidden; next card is deck.back()
  std::vector<int> removed;  // hidden, never revealed
  std::optional<int> face_up;
  int pot = 0;
  std::vector<Hand> hands;
  int to_move = 0;

  friend bool operator==(const State&, const State&) = default;
};

// Sum over maximal runs of consecutive cards of the run's lowest card,
// minus chips. Lower is better.
int score(std::span<const int> cards, int chips);

Events take(State& state);
// Throws Error(kIllegalMove) when the mover has no chips.
Events pay(State& state);

int total_chips(const State& state);

class Rules final : public engine::RulesFor<State> {
 public:
  std::string_view id() const override { return "nothanks"; }
  std::string_view display_name() const override { return "No Thanks!"; }
  int min_seats() const override { return 3; }
  int max_seats() const override { return 7; }

 protected:
  State initial(int seats, engine::Rng& rng) const override;
  std::optional<int> mover(const State& state) const override;
  std::vector<std::string> legal(const State& state, int seat) const override;
  Events play(State& state, int seat, std::string_view token,
              engine::Rng& rng) const override;
  std::optional<Result> result(const State& state) const override;
  Json view(const State& state, std::optional<int> viewer) const override;
};

}  // namespace boardforge::games::nothanks
