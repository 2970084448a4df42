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

#include "boardforge/engine/rules.hpp"

namespace boardforge::engine {

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::kWin: return "win";
    case Outcome::kLoss: return "loss";
    case Outcome::kDraw: return "draw";
  }
  return "draw";
}

Json to_json(const Result& result) {
  Json seats = Json::array();
  for (const SeatResult& seat : result) {
    Json entry = {{"outcome", to_string(seat.outcome)}};
    if (seat.score) entry["score"] = *seat.score;
    seats.push_back(std::move(entry));
  }
  return seats;
}

Result result_from_json(const Json& json) {
  if (!json.is_array()) fail(ErrorCode::kDataError, "result must be an array");
  Result result;
  for (const Json& entry : json) {
    const std::string outcome = entry.is_object() ? entry.value("outcome", "") : "";
    SeatResult seat;
    if (outcome == "win") {
      seat.outcome = Outcome::kWin;
    } else if (outcome == "loss") {
      seat.outcome = Outcome::kLoss;
    } else if (outcome == "draw") {
      seat.outcome = Outcome::kDraw;
    } else {
      fail(ErrorCode::kDataError, "bad outcome in result");
    }
    if (const auto it = entry.find("score"); it != entry.end()) {
      if (!it->is_number()) fail(ErrorCode::kDataError, "score must be a number");
      seat.score = it->get<double>();
    }
    result.push_back(seat);
  }
  return result;
}

std::vector<std::string> GameRules::move_patterns(const GameState&, int) const {
  return {};
}

std::string GameRules::public_token(std::string_view token) const {
  return std::string(token);
}

std::unique_ptr<GameState> GameRules::restore(const Json&) const {
  return nullptr;
}

}  // namespace boardforge::engine
