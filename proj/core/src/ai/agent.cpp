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

#include "boardforge/ai/agent.hpp"

#include <algorithm>

#include "boardforge/ai/eval.hpp"
#include "boardforge/ai/knuth.hpp"
#include "boardforge/ai/pig_solver.hpp"
#include "boardforge/ai/search.hpp"
#include "boardforge/engine/token.hpp"
#include "boardforge/games/nothanks.hpp"

namespace boardforge::ai {
namespace {

bool is_kalah(std::string_view game) { return game == "kalah" || game.starts_with("kalah-"); }

std::vector<Clue> clues_from(const engine::Json& view) {
  std::vector<Clue> clues;
  for (const auto& row : view.at("rows")) {
    const auto code = games::mastermind::parse_code(row.at("guess").get<std::string>());
    clues.push_back({*code, {row.at("black").get<int>(), row.at("white").get<int>()}});
  }
  return clues;
}

struct PigView {
  int own;
  int opponent;
  int turn_total;
  int target;
};

PigView pig_view(const engine::Json& view) {
  const int seat = view.at("to_move").get<int>();
  const auto scores = view.at("scores").get<std::array<int, 2>>();
  return {scores[static_cast<std::size_t>(seat)], scores[static_cast<std::size_t>(1 - seat)],
          view.at("turn_total").get<int>(), view.at("target").get<int>()};
}

std::unique_ptr<engine::GameState> restore(const engine::GameRules& rules,
                                           const engine::Json& view) {
  auto state = rules.restore(view);
  if (!state) {
    engine::fail(engine::ErrorCode::kDataError,
                 std::string(rules.display_name()) + " view cannot be restored");
  }
  return state;
}

}  // namespace

std::string AgentSpec::to_string() const {
  switch (kind) {
    case AgentKind::kRandom: return "random";
    case AgentKind::kGreedy: return "greedy";
    case AgentKind::kAlphaBeta: return "ab:" + std::to_string(param);
    case AgentKind::kPigOptimal: return "pig-optimal";
    case AgentKind::kKnuth: return "knuth";
    case AgentKind::kHoldAt: return "hold:" + std::to_string(param);
  }
  return "random";
}

std::optional<AgentSpec> parse_agent_spec(std::string_view text) {
  if (text == "random") return AgentSpec{AgentKind::kRandom, 0};
  if (text == "greedy") return AgentSpec{AgentKind::kGreedy, 0};
  if (text == "pig-optimal") return AgentSpec{AgentKind::kPigOptimal, 0};
  if (text == "knuth") return AgentSpec{AgentKind::kKnuth, 0};
  for (auto [prefix, kind] : {std::pair{std::string_view("ab:"), AgentKind::kAlphaBeta},
                              std::pair{std::string_view("hold:"), AgentKind::kHoldAt}}) {
    if (!text.starts_with(prefix)) continue;
    const std::optional<int> n = engine::parse_int(text.substr(prefix.size()));
    if (!n || *n < 1) return std::nullopt;
    return AgentSpec{kind, *n};
  }
  return std::nullopt;
}

bool supports(const AgentSpec& spec, std::string_view game) {
  switch (spec.kind) {
    case AgentKind::kRandom:
    case AgentKind::kGreedy: return game != "blackbox";
    case AgentKind::kAlphaBeta: return is_kalah(game) || game == "othello" || game == "pushfight";
    case AgentKind::kPigOptimal:
    case AgentKind::kHoldAt: return game == "pig";
    case AgentKind::kKnuth: return game == "mastermind";
  }
  return false;
}

Agent::Agent(AgentSpec spec, std::shared_ptr<const engine::GameRules> rules,
             std::uint64_t seed)
    : spec_(spec), rules_(std::move(rules)), rng_(seed) {
  if (!supports(spec_, rules_->id())) {
    engine::fail(engine::ErrorCode::kBadAgentSpec,
                 "agent '" + spec_.to_string() + "' cannot play " + std::string(rules_->display_name()));
  }
}

std::string Agent::choose(const engine::Observation& obs) {
  const auto& legal = obs.legal_moves;
  if (legal.empty()) {
    engine::fail(engine::ErrorCode::kInvalidArgument, "agent asked to move without legal moves");
  }
  switch (spec_.kind) {
    case AgentKind::kRandom:
      return legal[rng_.below(legal.size())];
    case AgentKind::kGreedy:
      return choose_greedy(obs);
    case AgentKind::kHoldAt: {
      const PigView v = pig_view(obs.view);
      const bool hold = v.turn_total >= spec_.param || v.own + v.turn_total >= v.target;
      return hold ? "hold" : "roll";
    }
    case AgentKind::kPigOptimal: {
      const PigView v = pig_view(obs.view);
      return pig_table(v.target).should_roll(v.own, v.opponent, v.turn_total) ? "roll" : "hold";
    }
    case AgentKind::kKnuth: {
      if (obs.view.at("phase") == "await_secret") return legal[rng_.below(legal.size())];
      const std::vector<Clue> clues = clues_from(obs.view);
      return "guess " + games::mastermind::format_code(knuth_next_guess(clues));
    }
    case AgentKind::kAlphaBeta: {
      const auto state = restore(*rules_, obs.view);
      const EvalFn eval = [this](const engine::GameState& s, int seat) {
        return greedy_eval(*rules_, s, seat);
      };
      return alphabeta(*rules_, *state, spec_.param, eval).move;
    }
  }
  return legal.front();
}

std::string Agent::choose_greedy(const engine::Observation& obs) {
  const auto& legal = obs.legal_moves;
  const std::string_view game = rules_->id();
  const int seat = *obs.viewer;

  if (game == "pig") {
    const PigView v = pig_view(obs.view);
    if (v.own + v.turn_total >= v.target) return "hold";
    const double hold = v.turn_total;
    const double roll = (5.0 * v.turn_total + 20.0) / 6.0;
    return roll > hold ? "roll" : "hold";
  }
  if (game == "mastermind") {
    if (obs.view.at("phase") == "await_secret") return legal[rng_.below(legal.size())];
    const std::vector<int> candidates = consistent_codes(clues_from(obs.view));
    const auto& code = games::mastermind::all_codes()[static_cast<std::size_t>(candidates.front())];
    return "guess " + games::mastermind::format_code(code);
  }
  if (game == "nothanks") {
    const auto& me = obs.view.at("players").at(static_cast<std::size_t>(seat));
    std::vector<int> cards = me.at("cards").get<std::vector<int>>();
    const int chips = me.at("chips").get<int>();
    cards.push_back(obs.view.at("face_up").get<int>());
    const int take = -games::nothanks::score(cards, chips + obs.view.at("pot").get<int>());
    cards.pop_back();
    const int pay = -games::nothanks::score(cards, chips - 1);
    if (std::find(legal.begin(), legal.end(), "pay") != legal.end() && pay > take) return "pay";
    return "take";
  }

  // Deterministic perfect-information games: one ply of lookahead.
  const auto state = restore(*rules_, obs.view);
  engine::Rng scratch(1);
  std::string best;
  double best_value = 0;
  for (const std::string& token : legal) {
    auto child = state->clone();
    rules_->apply(*child, seat, token, scratch);
    const auto result = rules_->terminal(*child);
    const double value = result ? terminal_value(*result, seat) : greedy_eval(*rules_, *child, seat);
    if (best.empty() || value > best_value) {
      best = token;
      best_value = value;
    }
  }
  return best;
}

Agent make_agent(std::string_view spec,
                 std::shared_ptr<const engine::GameRules> rules,
                 std::uint64_t seed) {
  const std::optional<AgentSpec> parsed = parse_agent_spec(spec);
  if (!parsed) {
    engine::fail(engine::ErrorCode::kBadAgentSpec, "unknown agent spec '" + std::string(spec) + "'");
  }
  return Agent(*parsed, std::move(rules), seed);
}

}  // namespace boardforge::ai
