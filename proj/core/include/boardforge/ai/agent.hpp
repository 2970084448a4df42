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

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "boardforge/engine/match.hpp"
#include "boardforge/engine/rng.hpp"

namespace boardforge::ai {

enum class AgentKind { kRandom, kGreedy, kAlphaBeta, kPigOptimal, kKnuth, kHoldAt };

// Textual form: "random", "greedy", "ab:DEPTH", "pig-optimal", "hold:N",
// "knuth".
struct AgentSpec {
  AgentKind kind = AgentKind::kRandom;
  int param = 0;

  std::string to_string() const;
  friend bool operator==(const AgentSpec&, const AgentSpec&) = default;
};

std::optional<AgentSpec> parse_agent_spec(std::string_view text);
bool supports(const AgentSpec& spec, std::string_view game_id);

class Agent {
 public:
  // Throws Error(kBadAgentSpec) when the spec does not apply to the game.
  Agent(AgentSpec spec, std::shared_ptr<const engine::GameRules> rules,
        std::uint64_t seed);

  const AgentSpec& spec() const { return spec_; }

  // Picks one of observation.legal_moves. Deterministic given the agent's
  // seed and the sequence of observations it has been shown.
  std::string choose(const engine::Observation& observation);

 private:
  std::string choose_greedy(const engine::Observation& observation);

  AgentSpec spec_;
  std::shared_ptr<const engine::GameRules> rules_;
  engine::Rng rng_;
};

// Parses and validates in one step; throws Error(kBadAgentSpec).
Agent make_agent(std::string_view spec,
                 std::shared_ptr<const engine::GameRules> rules,
                 std::uint64_t seed);

}  // namespace boardforge::ai
