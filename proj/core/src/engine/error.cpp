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

#include "boardforge/engine/error.hpp"

namespace boardforge::engine {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kUnknownGame: return "UnknownGame";
    case ErrorCode::kBadSeatCount: return "BadSeatCount";
    case ErrorCode::kMatchFinished: return "MatchFinished";
    case ErrorCode::kNotYourTurn: return "NotYourTurn";
    case ErrorCode::kBadToken: return "BadToken";
    case ErrorCode::kIllegalMove: return "IllegalMove";
    case ErrorCode::kReplayFailure: return "ReplayFailure";
    case ErrorCode::kDataError: return "DataError";
    case ErrorCode::kInconsistentHistory: return "InconsistentHistory";
    case ErrorCode::kBadAgentSpec: return "BadAgentSpec";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace boardforge::engine
