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

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boardforge/engine/registry.hpp"
#include "boardforge/engine/rules.hpp"

namespace boardforge::engine {

enum class Status { kInProgress, kFinished };

std::string_view to_string(Status status);

// What one participant may see of a match right now.
struct Observation {
  std::optional<int> viewer;  // nullopt: spectator
  std::string game_id;
  std::optional<int> turn;
  Json view;
  std::vector<std::string> legal_moves;
  std::vector<std::string> move_patterns;
  Status status = Status::kInProgress;
  std::optional<Result> result;
};

Json to_json(const Observation& observation);
// Throws Error(kDataError).
Observation observation_from_json(const Json& json);

// Save document: a match is persisted as its seed plus the tokens played.
struct MatchRecord {
  static constexpr int kFormatVersion = 1;

  int format_version = kFormatVersion;
  std::string game_id;
  std::vector<std::string> seat_names;
  std::uint64_t seed = 0;
  std::vector<std::string> moves;

  friend bool operator==(const MatchRecord&, const MatchRecord&) = default;
};

Json to_json(const MatchRecord& record);
// Strict: unknown or missing keys, wrong types, or a non-decimal seed throw
// Error(kDataError).
MatchRecord record_from_json(const Json& json);
std::string serialize(const MatchRecord& record);
MatchRecord parse_record(std::string_view text);

class Match {
 public:
  // Throws Error(kBadSeatCount).
  Match(std::shared_ptr<const GameRules> rules,
        std::vector<std::string> seat_names, std::uint64_t seed);

  Match(const Match& other);
  Match& operator=(const Match& other);
  Match(Match&&) noexcept = default;
  Match& operator=(Match&&) noexcept = default;

  const GameRules& rules() const { return *rules_; }
  std::shared_ptr<const GameRules> rules_ptr() const { return rules_; }
  std::string_view game_id() const { return rules_->id(); }
  const std::vector<std::string>& seat_names() const { return seat_names_; }
  int seat_count() const { return static_cast<int>(seat_names_.size()); }
  std::uint64_t seed() const { return seed_; }
  const Rng& rng() const { return rng_; }
  const GameState& state() const { return *state_; }
  const std::vector<std::string>& history() const { return history_; }
  Status status() const { return result_ ? Status::kFinished : Status::kInProgress; }
  const std::optional<Result>& result() const { return result_; }
  std::optional<int> to_move() const;
  std::vector<std::string> legal_moves(int seat) const;

  // Applies one move for `seat`. On any error the match is unchanged.
  // Throws Error with kMatchFinished, kNotYourTurn, kBadToken or
  // kIllegalMove.
  Events submit(int seat, std::string_view token);

  Observation observe(std::optional<int> viewer) const;

  // Fresh initial state for the same game and seats.
  void reset(std::uint64_t seed);

  friend bool operator==(const Match& a, const Match& b);

 private:
  std::shared_ptr<const GameRules> rules_;
  std::vector<std::string> seat_names_;
  std::uint64_t seed_;
  Rng rng_;
  std::unique_ptr<GameState> state_;
  std::vector<std::string> history_;
  std::optional<Result> result_;
};

// Throws Error(kUnknownGame) or Error(kBadSeatCount).
Match create_match(const Registry& registry, std::string_view game_id,
                   std::vector<std::string> seat_names, std::uint64_t seed);

MatchRecord save(const Match& match);
// Replays the record. Throws Error(kUnknownGame), Error(kBadSeatCount) or
// Error(kReplayFailure) when a stored token is rejected.
Match load(const Registry& registry, const MatchRecord& record);

}  // namespace boardforge::engine
