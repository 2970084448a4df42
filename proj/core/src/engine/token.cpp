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

#include "boardforge/engine/token.hpp"

#include <charconv>

namespace boardforge::engine {

std::optional<std::string> normalize_token(std::string_view raw) {
  if (raw.empty() || raw.size() > 256) return std::nullopt;
  std::string out;
  out.reserve(raw.size());
  char prev = ' ';
  for (char c : raw) {
    const auto u = static_cast<unsigned char>(c);
    if (u < 0x20 || u >= 0x7f) return std::nullopt;
    if (c == ' ' && prev == ' ') return std::nullopt;
    out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c);
    prev = c;
  }
  if (out.back() == ' ') return std::nullopt;
  return out;
}

std::vector<std::string_view> split_words(std::string_view token) {
  std::vector<std::string_view> words;
  std::size_t start = 0;
  while (start <= token.size()) {
    const std::size_t end = token.find(' ', start);
    if (end == std::string_view::npos) {
      words.push_back(token.substr(start));
      break;
    }
    words.push_back(token.substr(start, end - start));
    start = end + 1;
  }
  return words;
}

std::optional<int> parse_int(std::string_view text) {
  if (text.empty() || text.size() > 9) return std::nullopt;
  if (text.size() > 1 && text[0] == '0') return std::nullopt;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  int value = 0;
  std::from_chars(text.data(), text.data() + text.size(), value);
  return value;
}

}  // namespace boardforge::engine
