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

#include <charconv>
#include <set>
#include <string>

#include "boardforge/engine/match.hpp"

namespace boardforge::engine {
namespace {

const std::set<std::string, std::less<>> kRecordKeys = {
    "format_version", "game_id", "seat_names", "seed", "moves"};

std::uint64_t parse_seed(const Json& value) {
  if (!value.is_string()) {
    fail(ErrorCode::kDataError, "seed must be a decimal string");
  }
  const std::string& text = value.get_ref<const std::string&>();
  std::uint64_t seed = 0;
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, seed);
  if (text.empty() || ec != std::errc() || ptr != end) {
    fail(ErrorCode::kDataError, "seed is not a 64-bit decimal: '" + text + "'");
  }
  return seed;
}

std::vector<std::string> string_list(const Json& value, const char* key) {
  if (!value.is_array()) {
    fail(ErrorCode::kDataError, std::string(key) + " must be an array");
  }
  std::vector<std::string> out;
  for (const Json& item : value) {
    if (!item.is_string()) {
      fail(ErrorCode::kDataError, std::string(key) + " must hold strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Json to_json(const MatchRecord& record) {
  return Json{{"format_version", record.format_version},
              {"game_id", record.game_id},
              {"seat_names", record.seat_names},
              {"seed", std::to_string(record.seed)},
              {"moves", record.moves}};
}

MatchRecord record_from_json(const Json& json) {
  if (!json.is_object()) fail(ErrorCode::kDataError, "record must be an object");
  for (const auto& [key, value] : json.items()) {
    if (!kRecordKeys.contains(key)) {
      fail(ErrorCode::kDataError, "unknown record key '" + key + "'");
    }
  }
  for (const std::string& key : kRecordKeys) {
    if (!json.contains(key)) {
      fail(ErrorCode::kDataError, "record is missing '" + key + "'");
    }
  }
  MatchRecord record;
  const Json& version = json.at("format_version");
  if (!version.is_number_integer() ||
      version.get<int>() != MatchRecord::kFormatVersion) {
    fail(ErrorCode::kDataError, "unsupported format_version");
  }
  if (!json.at("game_id").is_string()) {
    fail(ErrorCode::kDataError, "game_id must be a string");
  }
  record.game_id = json.at("game_id").get<std::string>();
  record.seat_names = string_list(json.at("seat_names"), "seat_names");
  record.seed = parse_seed(json.at("seed"));
  record.moves = string_list(json.at("moves"), "moves");
  return record;
}

std::string serialize(const MatchRecord& record) {
  return to_json(record).dump(2) + "\n";
}

MatchRecord parse_record(std::string_view text) {
  Json json = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (json.is_discarded()) fail(ErrorCode::kDataError, "record is not JSON");
  return record_from_json(json);
}

}  // namespace boardforge::engine
