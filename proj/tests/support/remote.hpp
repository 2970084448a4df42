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
#include <string>
#include <vector>

#include "boardforge/engine/match.hpp"
#include "boardforge/net/client.hpp"

namespace boardforge::testing {

using engine::Json;

// Seat names for a scripted remote session: "alice" and "bob" share the
// seats, with alice taking every other seat when there are more than two.
std::vector<std::string> remote_seat_names(std::string_view game);

// A finished local match for `game`, found by trying policy seeds from
// `seed` upwards.
engine::Match finished_local_match(std::string_view game, std::uint64_t seed);

struct RemoteReport {
  std::vector<std::string> mismatches;  // empty when remote play matched
  std::vector<std::string> leaks;       // hidden fields seen by a viewer
  int messages = 0;
};

// Replays the local match's tokens through a server with two seated clients
// and one spectator, comparing every event, observation and the result.
RemoteReport replay_remotely(const engine::Match& local, net::Transport transport,
                             const std::string& host, std::uint16_t port);

// Hidden-field scan of one received message for a viewer.
void scan_for_leaks(const Json& message, std::string_view game, std::optional<int> viewer,
                    std::vector<std::string>& leaks);

}  // namespace boardforge::testing
