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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace boardforge::engine {

// Canonical form of a move token: lower case, words separated by exactly one
// space, no leading or trailing blanks. Returns nullopt when the input cannot
// be a token in any grammar (empty, control characters, doubled spaces).
std::optional<std::string> normalize_token(std::string_view raw);

// Splits an already normalized token on single spaces.
std::vector<std::string_view> split_words(std::string_view token);

// Parses a decimal integer occupying the whole string.
std::optional<int> parse_int(std::string_view text);

}  // namespace boardforge::engine
