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

#include <string>
#include <string_view>

#include "boardforge/engine/error.hpp"
#include "boardforge/engine/match.hpp"

namespace boardforge::net {

using Json = engine::Json;

inline constexpr int kProtocolVersion = 1;

// Wire error codes.
namespace codes {
inline constexpr std::string_view kBadRequest = "bad_request";
inline constexpr std::string_view kUnknownGame = "unknown_game";
inline constexpr std::string_view kUnknownMatch = "unknown_match";
inline constexpr std::string_view kSeatTaken = "seat_taken";
inline constexpr std::string_view kNotYourTurn = "not_your_turn";
inline constexpr std::string_view kIllegalMove = "illegal_move";
inline constexpr std::string_view kMatchFinished = "match_finished";
inline constexpr std::string_view kProtocol = "protocol";
}  // namespace codes

std::string_view wire_code(engine::ErrorCode code);

Json error_message(std::string_view code, std::string_view message);
Json event_message(std::string_view match, const engine::Event& event);
Json state_message(std::string_view match, const engine::Observation& observation);
Json finished_message(std::string_view match, const engine::Result& result);

// Inverse of event_message's payload, for clients replaying a stream.
engine::Event event_from_message(const Json& message);

}  // namespace boardforge::net
