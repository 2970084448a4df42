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

#include "boardforge/engine/registry.hpp"

namespace boardforge::engine {

void Registry::add(std::shared_ptr<const GameRules> rules) {
  std::string id(rules->id());
  games_[std::move(id)] = std::move(rules);
}

std::shared_ptr<const GameRules> Registry::get(std::string_view id) const {
  auto it = games_.find(id);
  if (it == games_.end()) {
    fail(ErrorCode::kUnknownGame, "unknown game '" + std::string(id) + "'");
  }
  return it->second;
}

bool Registry::contains(std::string_view id) const {
  return games_.find(id) != games_.end();
}

std::vector<std::string> Registry::ids() const {
  std::vector<std::string> out;
  for (const auto& [id, rules] : games_) out.push_back(id);
  return out;
}

}  // namespace boardforge::engine
