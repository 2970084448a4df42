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

#include "boardforge/games/builtin.hpp"

#include <memory>

#include "boardforge/games/blackbox.hpp"
#include "boardforge/games/kalah.hpp"
#include "boardforge/games/mastermind.hpp"
#include "boardforge/games/nothanks.hpp"
#include "boardforge/games/othello.hpp"
#include "boardforge/games/pig.hpp"
#include "boardforge/games/pushfight.hpp"

namespace boardforge::games {

const engine::Registry& builtin_registry() {
  static const engine::Registry registry = [] {
    engine::Registry r;
    r.add(std::make_shared<pig::Rules>());
    r.add(std::make_shared<mastermind::Rules>());
    r.add(std::make_shared<kalah::Rules>());
    r.add(std::make_shared<nothanks::Rules>());
    r.add(std::make_shared<othello::Rules>());
    r.add(std::make_shared<blackbox::Rules>());
    r.add(std::make_shared<pushfight::Rules>());
    return r;
  }();
  return registry;
}

}  // namespace boardforge::games
