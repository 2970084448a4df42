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

#include <array>
#include <optional>

#include "boardforge/games/common.hpp"

namespace boardforge::games::pig {

inline constexpr int kTarget = 100;
inline constexpr int kDieFaces = 6;

struct State {
  std::array<int, 2> scores{0, 0};
  int turn_total = 0;
  int to_move = 0;

  friend bool operator==(const State&, const State&) = default;
};

// Applies one roll with a known die value (1..6).
Events roll_with(State& state, int die);
// Draws the die as rng.below(6) + 1.
Events roll(State& state, engine::Rng& rng);
// Banks the turn total; hold with turn total 0 is a pass.
Events hold(State& state);

std::optional<int> winner(const State& state);

class Rules final : public engine::RulesFor<State> {
 public:
  std::string_view id() const override { return "pig"; }
  std::string_view display_name() const override { return "Pig"; }
  int min_seats() const override { return 2; }
  int max_seats() const override { return 2; }

 protected:
  State initial(int seats, engine::Rng& rng) const override;
  std::optional<int> mover(const State& state) const override;
  std::vector<std::string> legal(const State& state, int seat) const override;
  Events play(State& state, int seat, std::string_view token,
              engine::Rng& rng) const override;
  std::optional<Result> result(const State& state) const override;
  Json view(const State& state, std::optional<int> viewer) const override;
  std::optional<State> from_view(const Json& view) const override;
};

}  // namespace boardforge::games::pig
