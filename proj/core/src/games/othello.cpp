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

#include "boardforge/games/othello.hpp"

#include <algorithm>

namespace boardforge::games::othello {
namespace {

constexpr int kDirections[8][2] = {{-1, -1}, {-1, 0}, {-1, 1}, {0, -1},
                                   {0, 1},   {1, -1}, {1, 0},  {1, 1}};

char glyph(Disc d) {
  return d == Disc::kBlack ? 'B' : d == Disc::kWhite ? 'W' : '.';
}

}  // namespace

std::optional<int> parse_cell(std::string_view name) {
  if (name.size() != 2) return std::nullopt;
  const int col = name[0] - 'a';
  const int row = name[1] - '1';
  if (col < 0 || col >= kSize || row < 0 || row >= kSize) return std::nullopt;
  return row * kSize + col;
}

std::string cell_name(int cell) {
  return {static_cast<char>('a' + cell % kSize), static_cast<char>('1' + cell / kSize)};
}

State initial_state() {
  State s;
  s.board.fill(Disc::kEmpty);
  s.board[*parse_cell("d4")] = Disc::kWhite;
  s.board[*parse_cell("e5")] = Disc::kWhite;
  s.board[*parse_cell("d5")] = Disc::kBlack;
  s.board[*parse_cell("e4")] = Disc::kBlack;
  return s;
}

std::vector<int> resolve(const Board& board, int cell, Disc player) {
  std::vector<int> flips;
  if (board[static_cast<std::size_t>(cell)] != Disc::kEmpty) return flips;
  const Disc other = opponent(player);
  const int row = cell / kSize;
  const int col = cell % kSize;
  for (const auto& d : kDirections) {
    std::vector<int> run;
    int r = row + d[0];
    int c = col + d[1];
    while (r >= 0 && r < kSize && c >= 0 && c < kSize &&
           board[static_cast<std::size_t>(r * kSize + c)] == other) {
      run.push_back(r * kSize + c);
      r += d[0];
      c += d[1];
    }
    if (!run.empty() && r >= 0 && r < kSize && c >= 0 && c < kSize &&
        board[static_cast<std::size_t>(r * kSize + c)] == player) {
      flips.insert(flips.end(), run.begin(), run.end());
    }
  }
  std::sort(flips.begin(), flips.end());
  return flips;
}

std::vector<int> legal_placements(const Board& board, Disc player) {
  std::vector<int> cells;
  for (int cell = 0; cell < kCells; ++cell) {
    if (!resolve(board, cell, player).empty()) cells.push_back(cell);
  }
  return cells;
}

int count(const Board& board, Disc disc) {
  return static_cast<int>(std::count(board.begin(), board.end(), disc));
}

bool is_over(const State& state) {
  return state.consecutive_passes >= 2 || count(state.board, Disc::kEmpty) == 0;
}

State Rules::initial(int, engine::Rng&) const { return othello::initial_state(); }

std::optional<int> Rules::mover(const State& state) const {
  if (is_over(state)) return std::nullopt;
  return state.to_move;
}

std::vector<std::string> Rules::legal(const State& state, int seat) const {
  std::vector<std::string> out;
  for (int cell : legal_placements(state.board, disc_of(seat))) {
    out.push_back(cell_name(cell));
  }
  if (out.empty()) out.push_back("pass");
  return sorted(std::move(out));
}

Events Rules::play(State& state, int seat, std::string_view token,
                   engine::Rng&) const {
  const Disc me = disc_of(seat);
  if (token == "pass") {
    if (!legal_placements(state.board, me).empty()) {
      illegal("cannot pass while a placement is available");
    }
    ++state.consecutive_passes;
    state.to_move = 1 - seat;
    return {{"pass", {{"seat", seat}}}};
  }
  const std::optional<int> cell = parse_cell(token);
  if (!cell) bad_token("Othello", token);
  if (state.board[static_cast<std::size_t>(*cell)] != Disc::kEmpty) {
    illegal(std::string(token) + " is occupied");
  }
  const std::vector<int> flips = resolve(state.board, *cell, me);
  if (flips.empty()) illegal(std::string(token) + " flips nothing");

  state.board[static_cast<std::size_t>(*cell)] = me;
  Json flipped = Json::array();
  for (int f : flips) {
    state.board[static_cast<std::size_t>(f)] = me;
    flipped.push_back(cell_name(f));
  }
  state.consecutive_passes = 0;
  state.to_move = 1 - seat;
  return {{"place", {{"seat", seat}, {"cell", cell_name(*cell)}, {"flipped", flipped}}}};
}

std::optional<Result> Rules::result(const State& state) const {
  if (!is_over(state)) return std::nullopt;
  const int black = count(state.board, Disc::kBlack);
  const int white = count(state.board, Disc::kWhite);
  std::optional<int> winner;
  if (black != white) winner = black > white ? 0 : 1;
  return winner_result(2, winner, {double(black), double(white)});
}

Json Rules::view(const State& state, std::optional<int>) const {
  Json rows = Json::array();
  for (int r = 0; r < kSize; ++r) {
    std::string row;
    for (int c = 0; c < kSize; ++c) row.push_back(glyph(state.board[static_cast<std::size_t>(r * kSize + c)]));
    rows.push_back(row);
  }
  return {{"board", rows},
          {"to_move", state.to_move},
          {"consecutive_passes", state.consecutive_passes},
          {"black", count(state.board, Disc::kBlack)},
          {"white", count(state.board, Disc::kWhite)}};
}

std::optional<State> Rules::from_view(const Json& view) const {
  State s;
  const auto rows = view.at("board").get<std::vector<std::string>>();
  for (int r = 0; r < kSize; ++r) {
    for (int c = 0; c < kSize; ++c) {
      const char g = rows.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c));
      s.board[static_cast<std::size_t>(r * kSize + c)] =
          g == 'B' ? Disc::kBlack : g == 'W' ? Disc::kWhite : Disc::kEmpty;
    }
  }
  s.to_move = view.at("to_move").get<int>();
  s.consecutive_passes = view.at("consecutive_passes").get<int>();
  return s;
}

}  // namespace boardforge::games::othello
