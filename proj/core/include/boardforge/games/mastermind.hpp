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

namespace boardforge::games::mastermind {

inline constexpr int kPegs = 4;
inline constexpr int kColors = 6;
inline constexpr int kMaxGuesses = 10;
inline constexpr int kCodeCount = 1296;  // kColors ^ kPegs

// Digits 1..kColors.
using Code = std::array<int, kPegs>;

struct Feedback {
  int black = 0;
  int white = 0;

  friend bool operator==(const Feedback&, const Feedback&) = default;
};

// black: exact position matches; white: colour matches in the wrong place.
Feedback feedback(const Code& secret, const Code& guess);

std::optional<Code> parse_code(std::string_view digits);
std::string format_code(const Code& code);
// All codes in ascending order ("1111" .. "6666").
const std::vector<Code>& all_codes();
int code_index(const Code& code);

enum class Phase { kAwaitSecret, kGuessing, kDone };

struct Row {
  Code guess{};
  Feedback result;

  friend bool operator==(const Row&, const Row&) = default;
};

// One seat: the secret is drawn at setup and seat 0 guesses. Two seats:
// seat 0 sets the secret, seat 1 guesses.
struct State {
  int seats = 1;
  std::optional<Code> secret;
  std::vector<Row> rows;
  Phase phase = Phase::kAwaitSecret;

  friend bool operator==(const State&, const State&) = default;
};

int breaker_seat(const State& state);
bool solved(const State& state);

class Rules final : public engine::RulesFor<State> {
 public:
  std::string_view id() const override { return "mastermind"; }
  std::string_view display_name() const override { return "Mastermind"; }
  int min_seats() const override { return 1; }
  int max_seats() const override { return 2; }
  std::string public_token(std::string_view token) const override;

 protected:
  State initial(int seats, engine::Rng& rng) const override;
  std::optional<int> mover(const State& state) const override;
  std::vector<std::string> legal(const State& state, int seat) const override;
  Events play(State& state, int seat, std::string_view token,
              engine::Rng& rng) const override;
  std::optional<Result> result(const State& state) const override;
  Json view(const State& state, std::optional<int> viewer) const override;
};

}  // namespace boardforge::games::mastermind
