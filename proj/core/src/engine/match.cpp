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

#include "boardforge/engine/match.hpp"

#include <string>
#include <utility>

#include "boardforge/engine/token.hpp"

namespace boardforge::engine {

std::string_view to_string(Status status) {
  return status == Status::kFinished ? "finished" : "in_progress";
}

Json to_json(const Observation& observation) {
  Json out = {
      {"viewer", observation.viewer ? Json(*observation.viewer) : Json(nullptr)},
      {"game", observation.game_id},
      {"turn", observation.turn ? Json(*observation.turn) : Json(nullptr)},
      {"view", observation.view},
      {"legal_moves", observation.legal_moves},
      {"status", to_string(observation.status)},
  };
  if (!observation.move_patterns.empty()) {
    out["move_patterns"] = observation.move_patterns;
  }
  if (observation.result) out["result"] = to_json(*observation.result);
  return out;
}

Observation observation_from_json(const Json& json) {
  try {
    Observation o;
    if (!json.at("viewer").is_null()) o.viewer = json.at("viewer").get<int>();
    o.game_id = json.at("game").get<std::string>();
    if (!json.at("turn").is_null()) o.turn = json.at("turn").get<int>();
    o.view = json.at("view");
    o.legal_moves = json.at("legal_moves").get<std::vector<std::string>>();
    o.move_patterns = json.value("move_patterns", std::vector<std::string>{});
    const std::string status = json.at("status").get<std::string>();
    if (status != "in_progress" && status != "finished") {
      fail(ErrorCode::kDataError, "bad observation status '" + status + "'");
    }
    o.status = status == "finished" ? Status::kFinished : Status::kInProgress;
    if (json.contains("result")) o.result = result_from_json(json.at("result"));
    return o;
  } catch (const Json::exception& e) {
    fail(ErrorCode::kDataError, std::string("malformed observation: ") + e.what());
  }
}

Match::Match(std::shared_ptr<const GameRules> rules,
             std::vector<std::string> seat_names, std::uint64_t seed)
    : rules_(std::move(rules)),
      seat_names_(std::move(seat_names)),
      seed_(seed),
      rng_(seed) {
  const int seats = static_cast<int>(seat_names_.size());
  if (seats < rules_->min_seats() || seats > rules_->max_seats()) {
    fail(ErrorCode::kBadSeatCount,
         std::string(rules_->display_name()) + " takes " +
             std::to_string(rules_->min_seats()) + "-" +
             std::to_string(rules_->max_seats()) + " seats, got " +
             std::to_string(seats));
  }
  state_ = rules_->initial_state(seats, rng_);
  result_ = rules_->terminal(*state_);
}

Match::Match(const Match& other)
    : rules_(other.rules_),
      seat_names_(other.seat_names_),
      seed_(other.seed_),
      rng_(other.rng_),
      state_(other.state_->clone()),
      history_(other.history_),
      result_(other.result_) {}

Match& Match::operator=(const Match& other) {
  if (this != &other) {
    Match copy(other);
    *this = std::move(copy);
  }
  return *this;
}

std::optional<int> Match::to_move() const {
  if (result_) return std::nullopt;
  return rules_->to_move(*state_);
}

std::vector<std::string> Match::legal_moves(int seat) const {
  if (result_) return {};
  return rules_->legal_moves(*state_, seat);
}

Events Match::submit(int seat, std::string_view token) {
  if (result_) fail(ErrorCode::kMatchFinished, "match is finished");
  if (seat < 0 || seat >= seat_count()) {
    fail(ErrorCode::kNotYourTurn, "no such seat " + std::to_string(seat));
  }
  const std::optional<int> mover = rules_->to_move(*state_);
  if (mover != seat) {
    fail(ErrorCode::kNotYourTurn,
         "seat " + std::to_string(seat) + " is not to move");
  }
  const std::optional<std::string> canonical = normalize_token(token);
  if (!canonical) fail(ErrorCode::kBadToken, "malformed token");

  std::unique_ptr<GameState> next = state_->clone();
  Rng rng = rng_;
  Events game_events = rules_->apply(*next, seat, *canonical, rng);

  state_ = std::move(next);
  rng_ = rng;
  history_.push_back(*canonical);
  result_ = rules_->terminal(*state_);

  Events events;
  events.push_back(
      {"move", {{"seat", seat}, {"token", rules_->public_token(*canonical)}}});
  for (Event& e : game_events) events.push_back(std::move(e));
  if (result_) {
    events.push_back({"finished", {{"result", to_json(*result_)}}});
  } else if (auto turn = rules_->to_move(*state_)) {
    events.push_back({"turn", {{"seat", *turn}}});
  }
  return events;
}

Observation Match::observe(std::optional<int> viewer) const {
  Observation obs;
  obs.viewer = viewer;
  obs.game_id = std::string(rules_->id());
  obs.turn = to_move();
  obs.view = rules_->observe(*state_, viewer);
  obs.status = status();
  obs.result = result_;
  if (viewer && !result_) {
    obs.legal_moves = rules_->legal_moves(*state_, *viewer);
    obs.move_patterns = rules_->move_patterns(*state_, *viewer);
  }
  return obs;
}

void Match::reset(std::uint64_t seed) {
  seed_ = seed;
  rng_ = Rng(seed);
  state_ = rules_->initial_state(seat_count(), rng_);
  history_.clear();
  result_ = rules_->terminal(*state_);
}

bool operator==(const Match& a, const Match& b) {
  return a.rules_->id() == b.rules_->id() && a.seat_names_ == b.seat_names_ &&
         a.seed_ == b.seed_ && a.rng_ == b.rng_ &&
         a.state_->equals(*b.state_) && a.history_ == b.history_ &&
         a.result_ == b.result_;
}

Match create_match(const Registry& registry, std::string_view game_id,
                   std::vector<std::string> seat_names, std::uint64_t seed) {
  return Match(registry.get(game_id), std::move(seat_names), seed);
}

MatchRecord save(const Match& match) {
  MatchRecord record;
  record.game_id = std::string(match.game_id());
  record.seat_names = match.seat_names();
  record.seed = match.seed();
  record.moves = match.history();
  return record;
}

Match load(const Registry& registry, const MatchRecord& record) {
  Match match = create_match(registry, record.game_id, record.seat_names,
                             record.seed);
  for (std::size_t ply = 0; ply < record.moves.size(); ++ply) {
    const std::string& token = record.moves[ply];
    const std::optional<int> mover = match.to_move();
    if (!mover) {
      fail(ErrorCode::kReplayFailure,
           "move " + std::to_string(ply) + " '" + token +
               "' recorded after the match finished");
    }
    try {
      match.submit(*mover, token);
    } catch (const Error& e) {
      fail(ErrorCode::kReplayFailure, "move " + std::to_string(ply) + " '" +
                                          token + "' rejected: " + e.what());
    }
  }
  return match;
}

}  // namespace boardforge::engine
