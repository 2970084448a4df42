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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "boardforge/ai/agent.hpp"
#include "boardforge/engine/match.hpp"
#include "boardforge/engine/registry.hpp"
#include "boardforge/engine/rng.hpp"
#include "boardforge/net/protocol.hpp"

namespace boardforge::net {

using ConnId = std::uint64_t;

struct Outbound {
  ConnId to = 0;
  Json message;
  bool close = false;  // close the connection after delivering message
};
using Outbox = std::vector<Outbound>;

// All server state and message routing, independent of any transport. Not
// thread-safe: the owner serializes every call.
class Lobby {
 public:
  // Matches created without an explicit seed draw one from `seed`.
  Lobby(const engine::Registry& registry, std::uint64_t seed);

  void connect(ConnId conn);
  Outbox handle(ConnId conn, const Json& message);
  // Parses one line or frame; malformed JSON yields bad_request.
  Outbox handle_text(ConnId conn, std::string_view text);
  // Frees the connection's seats and tells the remaining participants.
  Outbox disconnect(ConnId conn);

  const engine::Match* match(std::string_view id) const;
  std::vector<std::string> match_ids() const;

 private:
  struct Session {
    std::optional<std::string> name;  // set by hello
    std::string id;
  };

  struct Seat {
    std::optional<ConnId> holder;
    std::optional<ai::Agent> agent;
  };

  struct Room {
    engine::Match match;
    std::vector<Seat> seats;
    std::set<ConnId> spectators;
  };

  Outbox on_hello(ConnId conn, const Json& message);
  Outbox on_create(ConnId conn, const Json& message);
  Outbox on_join(ConnId conn, const Json& message);
  Outbox on_move(ConnId conn, const Json& message);
  Outbox on_leave(ConnId conn, const Json& message);
  Outbox on_list_games(ConnId conn) const;
  Outbox on_list_matches(ConnId conn) const;

  Room& room(const Json& message);
  std::set<ConnId> participants(const Room& room) const;
  std::optional<int> viewer_for(const Room& room, ConnId conn) const;
  void send_state(Outbox& out, const std::string& id, const Room& room, ConnId conn) const;
  // Broadcasts the consequences of one accepted move.
  void publish(Outbox& out, const std::string& id, const Room& room,
               const engine::Events& events) const;
  // Lets agent seats move until a human is to move or the match ends.
  void drive_agents(Outbox& out, const std::string& id, Room& room);
  void release(Outbox& out, ConnId conn, const std::string& id, Room& room);

  const engine::Registry& registry_;
  engine::Rng seeds_;
  std::map<ConnId, Session> sessions_;
  std::map<std::string, Room, std::less<>> rooms_;
  std::uint64_t next_match_ = 1;
};

}  // namespace boardforge::net
