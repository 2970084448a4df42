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
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include "boardforge/engine/registry.hpp"

namespace boardforge::net {

// Transport-level failure: bind, connect, timeout or a dropped connection.
class NetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ServerConfig {
  std::string host = "127.0.0.1";
  // Port 0 picks an ephemeral port; nullopt disables the transport.
  std::optional<std::uint16_t> tcp_port = 0;
  std::optional<std::uint16_t> ws_port = 0;
  // Source of seeds for matches created without one; random if unset.
  std::optional<std::uint64_t> seed;
};

// Newline-delimited JSON over TCP and JSON text frames over WebSocket, both
// routed into one Lobby on a single network thread.
class Server {
 public:
  explicit Server(ServerConfig config);
  Server(ServerConfig config, const engine::Registry& registry);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds and starts serving on a background thread. Throws NetError.
  void start();
  // Ports actually bound (0 when the transport is disabled).
  std::uint16_t tcp_port() const;
  std::uint16_t ws_port() const;
  // Stops on SIGINT or SIGTERM.
  void stop_on_signals();
  void stop();
  // Blocks until the server stops.
  void wait();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace boardforge::net
