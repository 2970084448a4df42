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

#include "boardforge/net/protocol.hpp"

namespace boardforge::net {

std::string_view wire_code(engine::ErrorCode code) {
  using engine::ErrorCode;
  switch (code) {
    case ErrorCode::kUnknownGame: return codes::kUnknownGame;
    case ErrorCode::kMatchFinished: return codes::kMatchFinished;
    case ErrorCode::kNotYourTurn: return codes::kNotYourTurn;
    case ErrorCode::kBadToken:
    case ErrorCode::kIllegalMove: return codes::kIllegalMove;
    default: return codes::kBadRequest;
  }
}

Json error_message(std::string_view code, std::string_view message) {
  return {{"type", "error"}, {"code", code}, {"message", message}};
}

Json event_message(std::string_view match, const engine::Event& event) {
  return {{"type", "event"}, {"match", match}, {"kind", event.kind}, {"detail", event.detail}};
}

Json state_message(std::string_view match, const engine::Observation& observation) {
  return {{"type", "state"}, {"match", match}, {"observation", engine::to_json(observation)}};
}

Json finished_message(std::string_view match, const engine::Result& result) {
  return {{"type", "finished"}, {"match", match}, {"result", engine::to_json(result)}};
}

engine::Event event_from_message(const Json& message) {
  return {message.at("kind").get<std::string>(), message.value("detail", Json::object())};
}

}  // namespace boardforge::net
