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

#include "boardforge/games/kalah.hpp"

#include <numeric>

#include "boardforge/engine/token.hpp"

namespace boardforge::games::kalah {
namespace {

bool side_empty(const State& s, int seat) {
  for (int k = 1; k <= s.pits_per_side; ++k) {
    if (s.pits[static_cast<std::size_t>(pit_index(s, seat, k))] != 0) return false;
  }
  return true;
}

void sweep(State& s, int seat) {
  int& store = s.pits[static_cast<std::size_t>(store_index(s, seat))];
  for (int k = 1; k <= s.pits_per_side; ++k) {
    int& pit = s.pits[static_cast<std::size_t>(pit_index(s, seat, k))];
    store += pit;
    pit = 0;
  }
}

}  // namespace

State initial_state(int pits_per_side, int seeds_per_pit) {
  State s;
  s.pits_per_side = pits_per_side;
  s.pits.assign(static_cast<std::size_t>(2 * pits_per_side + 2), seeds_per_pit);
  s.pits[static_cast<std::size_t>(pits_per_side)] = 0;
  s.pits.back() = 0;
  return s;
}

int store_index(const State& state, int seat) {
  return seat == 0 ? state.pits_per_side : 2 * state.pits_per_side + 1;
}

int pit_index(const State& state, int seat, int pit) {
  return seat == 0 ? pit - 1 : state.pits_per_side + pit;
}

int opposite(const State& state, int index) {
  return 2 * state.pits_per_side - index;
}

int total_seeds(const State& state) {
  return std::accumulate(state.pits.begin(), state.pits.end(), 0);
}

Sowing sow(State& state, int pit) {
  const int n = state.pits_per_side;
  const int seat = state.to_move;
  if (state.over) illegal("the game is over");
  if (pit < 1 || pit > n) illegal("no pit " + std::to_string(pit));
  const int from = pit_index(state, seat, pit);
  int seeds = state.pits[static_cast<std::size_t>(from)];
  if (seeds == 0) illegal("pit " + std::to_string(pit) + " is empty");

  const int size = 2 * n + 2;
  const int own_store = store_index(state, seat);
  const int other_store = store_index(state, 1 - seat);
  state.pits[static_cast<std::size_t>(from)] = 0;
  int at = from;
  while (seeds > 0) {
    at = (at + 1) % size;
    if (at == other_store) continue;
    ++state.pits[static_cast<std::size_t>(at)];
    --seeds;
  }

  Sowing out;
  out.last_index = at;
  out.extra_turn = at == own_store;
  const bool own_pit = seat == 0 ? at < n : (at > n && at < 2 * n + 1);
  if (own_pit && state.pits[static_cast<std::size_t>(at)] == 1) {
    const int across = opposite(state, at);
    int& facing = state.pits[static_cast<std::size_t>(across)];
    if (facing > 0) {
      out.captured = facing + 1;
      state.pits[static_cast<std::size_t>(own_store)] += out.captured;
      facing = 0;
      state.pits[static_cast<std::size_t>(at)] = 0;
    }
  }

  if (side_empty(state, 0) || side_empty(state, 1)) {
    sweep(state, 0);
    sweep(state, 1);
    out.swept = true;
    state.over = true;
  } else if (!out.extra_turn) {
    state.to_move = 1 - seat;
  }
  return out;
}

std::optional<int> winner(const State& state) {
  const int south = state.pits[static_cast<std::size_t>(store_index(state, 0))];
  const int north = state.pits[static_cast<std::size_t>(store_index(state, 1))];
  if (south == north) return std::nullopt;
  return south > north ? 0 : 1;
}

Rules::Rules(int pits_per_side, int seeds_per_pit)
    : pits_per_side_(pits_per_side),
      seeds_per_pit_(seeds_per_pit),
      id_(pits_per_side == 6 && seeds_per_pit == 4
              ? "kalah"
              : "kalah-" + std::to_string(pits_per_side) + "-" +
                    std::to_string(seeds_per_pit)) {}

State Rules::initial(int, engine::Rng&) const {
  return kalah::initial_state(pits_per_side_, seeds_per_pit_);
}

std::optional<int> Rules::mover(const State& state) const {
  if (state.over) return std::nullopt;
  return state.to_move;
}

std::vector<std::string> Rules::legal(const State& state, int seat) const {
  std::vector<std::string> out;
  for (int k = 1; k <= state.pits_per_side; ++k) {
    if (state.pits[static_cast<std::size_t>(pit_index(state, seat, k))] > 0) {
      out.push_back("pit " + std::to_string(k));
    }
  }
  return sorted(std::move(out));
}

Events Rules::play(State& state, int seat, std::string_view token,
                   engine::Rng&) const {
  const auto words = engine::split_words(token);
  std::optional<int> pit;
  if (words.size() == 2 && words[0] == "pit") pit = engine::parse_int(words[1]);
  if (!pit || *pit < 1 || *pit > state.pits_per_side) bad_token("Kalah", token);

  const Sowing s = sow(state, *pit);
  Events events{{"sow", {{"seat", seat}, {"pit", *pit}, {"last", s.last_index}}}};
  if (s.captured > 0) events.push_back({"capture", {{"seat", seat}, {"seeds", s.captured}}});
  if (s.swept) events.push_back({"sweep", Json::object()});
  else if (s.extra_turn) events.push_back({"extra_turn", {{"seat", seat}}});
  return events;
}

std::optional<Result> Rules::result(const State& state) const {
  if (!state.over) return std::nullopt;
  const double south = state.pits[static_cast<std::size_t>(store_index(state, 0))];
  const double north = state.pits[static_cast<std::size_t>(store_index(state, 1))];
  return winner_result(2, winner(state), {south, north});
}

Json Rules::view(const State& state, std::optional<int>) const {
  const auto n = static_cast<std::ptrdiff_t>(state.pits_per_side);
  std::vector<int> south(state.pits.begin(), state.pits.begin() + n);
  std::vector<int> north(state.pits.begin() + n + 1, state.pits.begin() + 2 * n + 1);
  return {{"pits_per_side", state.pits_per_side},
          {"south", south},
          {"north", north},
          {"stores", {state.pits[static_cast<std::size_t>(n)], state.pits.back()}},
          {"to_move", state.to_move},
          {"over", state.over}};
}

std::optional<State> Rules::from_view(const Json& view) const {
  State s;
  s.pits_per_side = view.at("pits_per_side").get<int>();
  const auto south = view.at("south").get<std::vector<int>>();
  const auto north = view.at("north").get<std::vector<int>>();
  const auto stores = view.at("stores").get<std::array<int, 2>>();
  s.pits = south;
  s.pits.push_back(stores[0]);
  s.pits.insert(s.pits.end(), north.begin(), north.end());
  s.pits.push_back(stores[1]);
  s.to_move = view.at("to_move").get<int>();
  s.over = view.at("over").get<bool>();
  return s;
}

}  // namespace boardforge::games::kalah
