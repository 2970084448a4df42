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

#include "boardforge/games/pushfight.hpp"

#include <algorithm>
#include <deque>

#include "boardforge/engine/token.hpp"

namespace boardforge::games::pushfight {
namespace {

constexpr int kPiecesPerSide = kSquaresPerSide + kRoundsPerSide;
constexpr int kFirstCol[kRows] = {2, 1, 0, 2};
constexpr int kLastCol[kRows] = {5, 7, 6, 5};

struct Step {
  int dr;
  int dc;
};

Step step_of(Direction dir) {
  switch (dir) {
    case Direction::kUp: return {-1, 0};
    case Direction::kDown: return {1, 0};
    case Direction::kLeft: return {0, -1};
    case Direction::kRight: return {0, 1};
  }
  return {0, 0};
}

constexpr Direction kAllDirections[] = {Direction::kUp, Direction::kDown,
                                        Direction::kLeft, Direction::kRight};

bool own_half(int seat, int cell) {
  const int col = cell % kCols;
  return seat == 0 ? col < kCols / 2 : col >= kCols / 2;
}

char glyph(const std::optional<Piece>& piece) {
  if (!piece) return '.';
  const char c = piece->shape == Shape::kSquare ? 'S' : 'R';
  return piece->owner == 0 ? c : static_cast<char>(c - 'A' + 'a');
}

void end_moves(State& state, Events& events) {
  state.moves_left = 0;
  if (!has_legal_push(state)) {
    state.loser = state.to_move;
    events.push_back({"no_push", {{"seat", state.to_move}}});
  }
}

}  // namespace

bool on_board(int row, int col) {
  return row >= 0 && row < kRows && col >= kFirstCol[row] && col <= kLastCol[row];
}

std::optional<int> parse_cell(std::string_view name) {
  if (name.size() != 2) return std::nullopt;
  const int col = name[0] - 'a';
  const int row = name[1] - '1';
  if (col < 0 || col >= kCols || row < 0 || row >= kRows) return std::nullopt;
  return row * kCols + col;
}

std::string cell_name(int cell) {
  return {static_cast<char>('a' + cell % kCols), static_cast<char>('1' + cell / kCols)};
}

std::optional<Direction> parse_direction(std::string_view word) {
  if (word == "up") return Direction::kUp;
  if (word == "down") return Direction::kDown;
  if (word == "left") return Direction::kLeft;
  if (word == "right") return Direction::kRight;
  return std::nullopt;
}

std::string_view to_string(Direction dir) {
  switch (dir) {
    case Direction::kUp: return "up";
    case Direction::kDown: return "down";
    case Direction::kLeft: return "left";
    case Direction::kRight: return "right";
  }
  return "up";
}

int piece_count(const State& state, int owner, std::optional<Shape> shape) {
  int n = 0;
  for (const auto& p : state.board) {
    if (p && p->owner == owner && (!shape || p->shape == *shape)) ++n;
  }
  return n;
}

std::vector<int> slide_targets(const State& state, int cell) {
  const auto& piece = state.board[static_cast<std::size_t>(cell)];
  if (!piece || piece->owner != state.to_move) {
    illegal(cell_name(cell) + " does not hold a piece of the seat to move");
  }
  std::array<bool, kCells> seen{};
  seen[static_cast<std::size_t>(cell)] = true;
  std::deque<int> frontier{cell};
  std::vector<int> reached;
  while (!frontier.empty()) {
    const int at = frontier.front();
    frontier.pop_front();
    for (Direction dir : kAllDirections) {
      const Step s = step_of(dir);
      const int r = at / kCols + s.dr;
      const int c = at % kCols + s.dc;
      if (!on_board(r, c)) continue;
      const int next = r * kCols + c;
      if (seen[static_cast<std::size_t>(next)] || state.board[static_cast<std::size_t>(next)]) continue;
      seen[static_cast<std::size_t>(next)] = true;
      reached.push_back(next);
      frontier.push_back(next);
    }
  }
  std::sort(reached.begin(), reached.end());
  return reached;
}

PushCheck check_push(const State& state, int pusher, Direction dir) {
  if (state.phase != Phase::kPlay) return {false, "pieces are still being placed"};
  const auto& piece = state.board[static_cast<std::size_t>(pusher)];
  if (!piece || piece->owner != state.to_move || piece->shape != Shape::kSquare) {
    return {false, "only a square of the seat to move can push"};
  }
  const Step s = step_of(dir);
  int r = pusher / kCols;
  int c = pusher % kCols;
  int length = 0;
  while (on_board(r, c) && state.board[static_cast<std::size_t>(r * kCols + c)]) {
    if (state.anchor == r * kCols + c) return {false, "the anchored piece cannot move"};
    ++length;
    r += s.dr;
    c += s.dc;
  }
  if (length < 2) return {false, "there is nothing to push"};
  if (!on_board(r, c) && s.dr != 0) return {false, "the rail blocks the push"};
  return {true, {}};
}

PushOutcome push(State& state, int pusher, Direction dir) {
  const PushCheck check = check_push(state, pusher, dir);
  if (!check.legal) illegal(check.reason);
  const Step s = step_of(dir);
  PushOutcome out;
  int r = pusher / kCols;
  int c = pusher % kCols;
  while (on_board(r, c) && state.board[static_cast<std::size_t>(r * kCols + c)]) {
    out.moved.push_back(r * kCols + c);
    r += s.dr;
    c += s.dc;
  }
  // Shift from the far end so nothing is overwritten.
  if (!on_board(r, c)) {
    out.fell_off_owner = state.board[static_cast<std::size_t>(out.moved.back())]->owner;
  } else {
    state.board[static_cast<std::size_t>(r * kCols + c)] =
        state.board[static_cast<std::size_t>(out.moved.back())];
  }
  for (std::size_t i = out.moved.size() - 1; i > 0; --i) {
    state.board[static_cast<std::size_t>(out.moved[i])] =
        state.board[static_cast<std::size_t>(out.moved[i - 1])];
  }
  state.board[static_cast<std::size_t>(pusher)].reset();
  state.anchor = pusher + s.dr * kCols + s.dc;
  return out;
}

bool has_legal_push(const State& state) {
  for (int cell = 0; cell < kCells; ++cell) {
    for (Direction dir : kAllDirections) {
      if (check_push(state, cell, dir).legal) return true;
    }
  }
  return false;
}

State Rules::initial(int, engine::Rng&) const { return State{}; }

std::optional<int> Rules::mover(const State& state) const {
  if (state.loser) return std::nullopt;
  return state.to_move;
}

std::vector<std::string> Rules::legal(const State& state, int seat) const {
  std::vector<std::string> out;
  if (state.phase == Phase::kPlacement) {
    const bool squares = piece_count(state, seat, Shape::kSquare) < kSquaresPerSide;
    const bool rounds = piece_count(state, seat, Shape::kRound) < kRoundsPerSide;
    for (int cell = 0; cell < kCells; ++cell) {
      if (!on_board(cell) || !own_half(seat, cell) || state.board[static_cast<std::size_t>(cell)]) continue;
      if (squares) out.push_back("place s " + cell_name(cell));
      if (rounds) out.push_back("place r " + cell_name(cell));
    }
    return sorted(std::move(out));
  }
  for (int cell = 0; cell < kCells; ++cell) {
    const auto& piece = state.board[static_cast<std::size_t>(cell)];
    if (!piece || piece->owner != seat) continue;
    if (state.moves_left > 0) {
      for (int target : slide_targets(state, cell)) {
        out.push_back("move " + cell_name(cell) + " " + cell_name(target));
      }
    }
    for (Direction dir : kAllDirections) {
      if (check_push(state, cell, dir).legal) {
        out.push_back("push " + cell_name(cell) + " " + std::string(to_string(dir)));
      }
    }
  }
  if (state.moves_left > 0) out.push_back("skip");
  return sorted(std::move(out));
}

Events Rules::play(State& state, int seat, std::string_view token,
                   engine::Rng&) const {
  const auto words = engine::split_words(token);
  const std::string_view verb = words.front();

  if (verb == "place" && words.size() == 3 && (words[1] == "s" || words[1] == "r")) {
    const std::optional<int> cell = parse_cell(words[2]);
    if (!cell) bad_token("Push Fight", token);
    const Shape shape = words[1] == "s" ? Shape::kSquare : Shape::kRound;
    if (state.phase != Phase::kPlacement) illegal("placement is over");
    if (!on_board(*cell) || !own_half(seat, *cell)) illegal(cell_name(*cell) + " is outside your half");
    if (state.board[static_cast<std::size_t>(*cell)]) illegal(cell_name(*cell) + " is occupied");
    const int limit = shape == Shape::kSquare ? kSquaresPerSide : kRoundsPerSide;
    if (piece_count(state, seat, shape) >= limit) illegal("no such piece left to place");
    state.board[static_cast<std::size_t>(*cell)] = Piece{seat, shape};
    if (piece_count(state, seat) == kPiecesPerSide) {
      if (seat == 0) {
        state.to_move = 1;
      } else {
        state.phase = Phase::kPlay;
        state.to_move = 0;
        state.moves_left = 2;
      }
    }
    return {{"place", {{"seat", seat}, {"shape", words[1]}, {"cell", cell_name(*cell)}}}};
  }

  if (verb == "move" && words.size() == 3) {
    const std::optional<int> from = parse_cell(words[1]);
    const std::optional<int> to = parse_cell(words[2]);
    if (!from || !to) bad_token("Push Fight", token);
    if (state.phase != Phase::kPlay) illegal("pieces are still being placed");
    if (state.moves_left == 0) illegal("no moves left this turn: push");
    const std::vector<int> targets = slide_targets(state, *from);
    if (!std::binary_search(targets.begin(), targets.end(), *to)) {
      illegal(cell_name(*to) + " is not reachable from " + cell_name(*from));
    }
    state.board[static_cast<std::size_t>(*to)] = state.board[static_cast<std::size_t>(*from)];
    state.board[static_cast<std::size_t>(*from)].reset();
    Events events{{"move", {{"seat", seat}, {"from", cell_name(*from)}, {"to", cell_name(*to)}}}};
    if (--state.moves_left == 0) end_moves(state, events);
    return events;
  }

  if (verb == "skip" && words.size() == 1) {
    if (state.phase != Phase::kPlay) illegal("pieces are still being placed");
    if (state.moves_left == 0) illegal("nothing left to skip");
    Events events{{"skip", {{"seat", seat}}}};
    end_moves(state, events);
    return events;
  }

  if (verb == "push" && words.size() == 3) {
    const std::optional<int> pusher = parse_cell(words[1]);
    const std::optional<Direction> dir = parse_direction(words[2]);
    if (!pusher || !dir) bad_token("Push Fight", token);
    const PushOutcome out = push(state, *pusher, *dir);
    Json moved = Json::array();
    for (int cell : out.moved) moved.push_back(cell_name(cell));
    Events events{{"push", {{"seat", seat}, {"from", cell_name(*pusher)}, {"direction", words[2]}, {"line", moved}}}};
    if (out.fell_off_owner) {
      state.loser = *out.fell_off_owner;
      events.push_back({"fell_off", {{"owner", *out.fell_off_owner}}});
    } else {
      state.to_move = 1 - seat;
      state.moves_left = 2;
    }
    return events;
  }
  bad_token("Push Fight", token);
}

std::optional<Result> Rules::result(const State& state) const {
  if (!state.loser) return std::nullopt;
  return winner_result(2, 1 - *state.loser,
                       {double(piece_count(state, 0)), double(piece_count(state, 1))});
}

Json Rules::view(const State& state, std::optional<int>) const {
  Json rows = Json::array();
  for (int r = 0; r < kRows; ++r) {
    std::string row;
    for (int c = 0; c < kCols; ++c) {
      row.push_back(on_board(r, c) ? glyph(state.board[static_cast<std::size_t>(r * kCols + c)]) : ' ');
    }
    rows.push_back(row);
  }
  return {{"phase", state.phase == Phase::kPlacement ? "placement" : "play"},
          {"board", rows},
          {"anchor", state.anchor ? Json(cell_name(*state.anchor)) : Json(nullptr)},
          {"moves_left", state.moves_left},
          {"to_move", state.to_move},
          {"loser", state.loser ? Json(*state.loser) : Json(nullptr)}};
}

std::optional<State> Rules::from_view(const Json& view) const {
  State s;
  const auto rows = view.at("board").get<std::vector<std::string>>();
  for (int r = 0; r < kRows; ++r) {
    for (int c = 0; c < kCols; ++c) {
      const char g = rows.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(c));
      if (g == 'S' || g == 'R' || g == 's' || g == 'r') {
        s.board[static_cast<std::size_t>(r * kCols + c)] =
            Piece{g == 'S' || g == 'R' ? 0 : 1, g == 'S' || g == 's' ? Shape::kSquare : Shape::kRound};
      }
    }
  }
  if (!view.at("anchor").is_null()) s.anchor = parse_cell(view.at("anchor").get<std::string>());
  s.phase = view.at("phase").get<std::string>() == "placement" ? Phase::kPlacement : Phase::kPlay;
  s.moves_left = view.at("moves_left").get<int>();
  s.to_move = view.at("to_move").get<int>();
  if (!view.at("loser").is_null()) s.loser = view.at("loser").get<int>();
  return s;
}

}  // namespace boardforge::games::pushfight
