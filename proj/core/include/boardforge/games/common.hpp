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

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "boardforge/engine/rules.hpp"

namespace boardforge::games {

using engine::Events;
using engine::Json;
using engine::Result;

// Winner takes kWin, everybody else kLoss; nullopt winner is a draw for all.
Result winner_result(int seats, std::optional<int> winner,
                     const std::vector<double>& scores = {});

// Lowest score wins; tied lowest seats draw, the rest lose.
Result lowest_score_result(const std::vector<double>& scores);

inline std::vector<std::string> sorted(std::vector<std::string> tokens) {
  std::sort(tokens.begin(), tokens.end());
  return tokens;
}

[[noreturn]] void bad_token(std::string_view game, std::string_view token);
[[noreturn]] void illegal(const std::string& why);

}  // namespace boardforge::games
