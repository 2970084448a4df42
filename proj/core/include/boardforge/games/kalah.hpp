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
#include <vector>

#include "boardforge/games/common.hpp"

namespace boardforge::games::kalah {

// Board layout for n pits per side: south pits 0..n-1, south store n, north
// pits n+1..2n, north store 2n+1. Seeds travel towards higher indices.
struct State {
  int pits_per_side = 6;
  std::vector<int> pits;
  int to_move = 0;
  bool over = false;

  friend bool operator==(const State&, const State&) = default;
};

State initial_state(int pits_per_side = 6, int seeds_per_pit = 4);

int store_index(const State& state, int seat);
// Board index of the mover-relative pit number (1..n).
int pit_index(const State& state, int seat, int pit);
int opposite(const State& state, int index);
int total_seeds(const State& state);

struct Sowing {
  int last_index = 0;
  bool extra_turn = false;
  int captured = 0;  // seeds moved to the store by a capture, 0 if none
  bool swept = false;
};

// Sows the mover's pit (1..n). Throws Error(kIllegalMove) for an empty pit.
Sowing sow(State& state, int pit);

std::optional<int> winner(const State& state);

class Rules final : public engine::RulesFor<State> {
 public:
  Rules(int pits_per_side = 6, int seeds_per_pit = 4);

  std::string_view id() const override { return id_; }
  std::string_view display_name() const override { return "Kalah"; }
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

 private:
  int pits_per_side_;
  int seeds_per_pit_;
  std::string id_;
};

}  // namespace boardforge::games::kalah
