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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boardforge/games/common.hpp"

namespace boardforge::games::blackbox {

inline constexpr int kSize = 8;
inline constexpr int kCells = kSize * kSize;
inline constexpr int kAtoms = 4;
inline constexpr int kPorts = 4 * kSize;

// Ports: 1-8 left side top to bottom (ray heads east), 9-16 bottom side left
// to right (north), 17-24 right side bottom to top (west), 25-32 top side
// right to left (south). Cells are row * 8 + col, "a1" top-left.
std::optional<int> parse_cell(std::string_view name);
std::string cell_name(int cell);

enum class RayKind { kHit, kReflect, kExit };

struct RayOutcome {
  RayKind kind = RayKind::kHit;
  int exit_port = 0;  // set for kExit only

  friend bool operator==(const RayOutcome&, const RayOutcome&) = default;
};

std::string to_string(const RayOutcome& outcome);

using AtomSet = std::array<bool, kCells>;

AtomSet atom_set(std::span<const int> cells);

// Throws Error(kBadToken) for a port outside 1..32.
RayOutcome trace(const AtomSet& atoms, int port);

struct Shot {
  int port = 0;
  RayOutcome outcome;

  friend bool operator==(const Shot&, const Shot&) = default;
};

// Hit or reflect costs 1, an exit costs 2, each guessed cell that holds no
// atom costs 5. Throws Error(kIllegalMove) unless the guess names four
// distinct cells.
int score(std::span<const Shot> shots, std::span<const int> guess,
          std::span<const int> atoms);

struct Round {
  int seeker = 0;
  std::vector<int> atoms;  // ascending, hidden until the guess
  std::vector<Shot> shots;
  std::optional<std::vector<int>> guess;
  int score = 0;

  friend bool operator==(const Round&, const Round&) = default;
};

// Solo play is one round; two seats play two rounds with the seeker role
// alternating. Atoms are hidden by the rng, never by a seat.
struct State {
  int seats = 1;
  std::vector<Round> rounds;

  friend bool operator==(const State&, const State&) = default;
};

std::vector<int> draw_atoms(engine::Rng& rng);

class Rules final : public engine::RulesFor<State> {
 public:
  std::string_view id() const override { return "blackbox"; }
  std::string_view display_name() const override { return "Black Box"; }
  int min_seats() const override { return 1; }
  int max_seats() const override { return 2; }

 protected:
  State initial(int seats, engine::Rng& rng) const override;
  std::optional<int> mover(const State& state) const override;
  std::vector<std::string> legal(const State& state, int seat) const override;
  std::vector<std::string> patterns(const State& state, int seat) const override;
  Events play(State& state, int seat, std::string_view token,
              engine::Rng& rng) const override;
  std::optional<Result> result(const State& state) const override;
  Json view(const State& state, std::optional<int> viewer) const override;
};

}  // namespace boardforge::games::blackbox
