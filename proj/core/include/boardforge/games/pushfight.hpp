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
#include <string>
#include <string_view>
#include <vector>

#include "boardforge/games/common.hpp"

namespace boardforge::games::pushfight {

inline constexpr int kRows = 4;
inline constexpr int kCols = 8;
inline constexpr int kCells = kRows * kCols;
inline constexpr int kSquaresPerSide = 3;
inline constexpr int kRoundsPerSide = 2;

// Playable cells: row 0 cols 2-5, row 1 cols 1-7, row 2 cols 0-6, row 3
// cols 2-5. Leaving the board upwards or downwards crosses a rail; leaving
// it sideways is an open edge.
bool on_board(int row, int col);
inline bool on_board(int cell) { return on_board(cell / kCols, cell % kCols); }

// "a1" is row 0 col 0; letters are columns, digits rows 1-4 top to bottom.
std::optional<int> parse_cell(std::string_view name);
std::string cell_name(int cell);

enum class Shape { kSquare, kRound };
enum class Direction { kUp, kDown, kLeft, kRight };

std::optional<Direction> parse_direction(std::string_view word);
std::string_view to_string(Direction dir);

struct Piece {
  int owner = 0;
  Shape shape = Shape::kSquare;

  friend bool operator==(const Piece&, const Piece&) = default;
};

enum class Phase { kPlacement, kPlay };

struct State {
  std::array<std::optional<Piece>, kCells> board{};
  std::optional<int> anchor;
  Phase phase = Phase::kPlacement;
  int moves_left = 2;
  int to_move = 0;
  std::optional<int> loser;

  friend bool operator==(const State&, const State&) = default;
};

int piece_count(const State& state, int owner, std::optional<Shape> shape = {});

// Empty cells reachable from `cell` by orthogonal steps through empty
// playable cells, ascending. Throws Error(kIllegalMove) unless `cell` holds
// a piece of the seat to move.
std::vector<int> slide_targets(const State& state, int cell);

struct PushCheck {
  bool legal = false;
  std::string reason;
};

PushCheck check_push(const State& state, int pusher, Direction dir);

struct PushOutcome {
  std::vector<int> moved;  // cells of the pushed line before the push
  std::optional<int> fell_off_owner;
};

// Throws Error(kIllegalMove) with the failed rule.
PushOutcome push(State& state, int pusher, Direction dir);
bool has_legal_push(const State& state);

class Rules final : public engine::RulesFor<State> {
 public:
  std::string_view id() const override { return "pushfight"; }
  std::string_view display_name() const override { return "Push Fight"; }
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

}  // namespace boardforge::games::pushfight
