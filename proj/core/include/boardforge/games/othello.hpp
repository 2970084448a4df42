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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boardforge/games/common.hpp"

namespace boardforge::games::othello {

inline constexpr int kSize = 8;
inline constexpr int kCells = kSize * kSize;

enum class Disc : std::uint8_t { kEmpty, kBlack, kWhite };

using Board = std::array<Disc, kCells>;

// Cells are row * 8 + col; "a1" is the top-left corner, letters are columns.
std::optional<int> parse_cell(std::string_view name);
std::string cell_name(int cell);

inline Disc disc_of(int seat) { return seat == 0 ? Disc::kBlack : Disc::kWhite; }
inline Disc opponent(Disc d) {
  return d == Disc::kBlack ? Disc::kWhite : Disc::kBlack;
}

struct State {
  Board board{};
  int to_move = 0;  // seat 0 plays Black
  int consecutive_passes = 0;

  friend bool operator==(const State&, const State&) = default;
};

State initial_state();

// Cells flipped by `player` placing on `cell`, ascending. Empty when the
// placement is illegal (including an occupied cell).
std::vector<int> resolve(const Board& board, int cell, Disc player);
std::vector<int> legal_placements(const Board& board, Disc player);
int count(const Board& board, Disc disc);
bool is_over(const State& state);

class Rules final : public engine::RulesFor<State> {
 public:
  std::string_view id() const override { return "othello"; }
  std::string_view display_name() const override { return "Othello"; }
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

}  // namespace boardforge::games::othello
