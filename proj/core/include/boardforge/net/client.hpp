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

#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boardforge/net/protocol.hpp"
#include "boardforge/net/server.hpp"

namespace boardforge::net {

enum class Transport { kTcp, kWebSocket };

// An error message received from the server.
class RemoteError : public std::runtime_error {
 public:
  RemoteError(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

inline constexpr std::chrono::milliseconds kDefaultTimeout{5000};

// Blocking client. Messages are received on a background thread and queued
// in arrival order.
class Client {
 public:
  // Throws NetError when the server cannot be reached.
  Client(Transport transport, const std::string& host, std::uint16_t port);
  ~Client();

  Client(const Client&) = delete;
  Client& operator=(const Client&) = delete;

  void send(const Json& message);
  // Next queued message; nullopt on timeout or once the connection is closed
  // and drained.
  std::optional<Json> next(std::chrono::milliseconds timeout = kDefaultTimeout);
  bool connected() const;

  // Discards messages until one of `type` arrives. An error message throws
  // RemoteError; timeout or disconnect throws NetError. Skipped messages are
  // appended to `skipped` when given.
  Json wait_for(std::string_view type, std::chrono::milliseconds timeout = kDefaultTimeout,
                std::vector<Json>* skipped = nullptr);

  // Convenience requests; each waits for its reply.
  std::string hello(const std::string& name);
  std::string create(const std::string& game, const std::vector<std::string>& seats,
                     std::optional<std::uint64_t> seed = std::nullopt);
  // Seat taken, or nullopt when joined as a spectator.
  std::optional<int> join(const std::string& match, const std::string& name,
                          std::optional<int> seat = std::nullopt);
  // Fire and forget; the outcome arrives as state or error messages.
  void move(const std::string& match, const std::string& token);

  void close();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace boardforge::net
