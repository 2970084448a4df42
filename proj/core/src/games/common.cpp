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

#include "boardforge/games/common.hpp"

#include <string>

namespace boardforge::games {

Result winner_result(int seats, std::optional<int> winner,
                     const std::vector<double>& scores) {
  Result result(static_cast<std::size_t>(seats));
  for (int seat = 0; seat < seats; ++seat) {
    auto& r = result[static_cast<std::size_t>(seat)];
    if (!winner) {
      r.outcome = engine::Outcome::kDraw;
    } else {
      r.outcome = seat == *winner ? engine::Outcome::kWin : engine::Outcome::kLoss;
    }
    if (static_cast<std::size_t>(seat) < scores.size()) {
      r.score = scores[static_cast<std::size_t>(seat)];
    }
  }
  return result;
}

Result lowest_score_result(const std::vector<double>& scores) {
  const double best = *std::min_element(scores.begin(), scores.end());
  const auto tied = std::count(scores.begin(), scores.end(), best);
  Result result;
  for (double s : scores) {
    engine::Outcome outcome = engine::Outcome::kLoss;
    if (s == best) outcome = tied > 1 ? engine::Outcome::kDraw : engine::Outcome::kWin;
    result.push_back({outcome, s});
  }
  return result;
}

void bad_token(std::string_view game, std::string_view token) {
  engine::fail(engine::ErrorCode::kBadToken,
               "'" + std::string(token) + "' is not a " + std::string(game) +
                   " move");
}

void illegal(const std::string& why) {
  engine::fail(engine::ErrorCode::kIllegalMove, why);
}

}  // namespace boardforge::games
