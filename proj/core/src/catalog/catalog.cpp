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

#include "boardforge/catalog/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "boardforge/engine/error.hpp"
#include "boardforge/engine/token.hpp"

namespace boardforge::catalog {
namespace detail {
extern const std::string_view kBundledCatalog;
}  // namespace detail

namespace {

using engine::ErrorCode;
using Json = nlohmann::json;

struct TopicInfo {
  Topic topic;
  std::string_view name;
  std::string_view alias;
  std::string_view comment;
};

constexpr std::array<TopicInfo, 6> kTopics = {{
    {Topic::kBasics, "Basics", "Basics", "Assignments, simple branches and loops."},
    {Topic::kArrays, "Arrays", "Arrays", "One-dimensional arrays and lists."},
    {Topic::kArrays2D, "2D Arrays", "Arrays2D", "Two-dimensional arrays"},
    {Topic::kAlgorithms, "Algorithms", "Algorithms", "Basic algorithms (searching, sorting, etc.)"},
    {Topic::kAlgorithmsPlus, "Algorithms+", "AlgorithmsPlus",
     "More advanced algorithms like matrix transposition and/or tricky techniques."},
    {Topic::kGraphs, "Graphs", "Graphs", "Graph representations and algorithms"},
}};

constexpr std::array<std::string_view, 5> kCategories = {"Dice", "Deduction", "Abstract",
                                                         "Cards", "Economic"};

bool iequals(std::string_view a, std::string_view b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
    return std::tolower(static_cast<unsigned char>(x)) == std::tolower(static_cast<unsigned char>(y));
  });
}

[[noreturn]] void bad_data(const std::string& what) {
  engine::fail(ErrorCode::kDataError, "catalog: " + what);
}

template <typename T>
T field(const Json& row, const char* key) {
  if (!row.contains(key)) bad_data(std::string("missing key '") + key + "'");
  try {
    return row.at(key).get<T>();
  } catch (const Json::exception&) {
    bad_data(std::string("wrong type for '") + key + "'");
  }
}

CatalogEntry parse_entry(const Json& row) {
  static const std::set<std::string> kKeys = {"name",    "bgg_id",   "bgg_rating",
                                              "core_loc", "gui_value", "players",
                                              "category", "topics",   "implemented"};
  if (!row.is_object()) bad_data("entry is not an object");
  for (const auto& [key, value] : row.items()) {
    if (!kKeys.contains(key)) bad_data("unknown key '" + key + "'");
  }
  CatalogEntry e;
  e.name = field<std::string>(row, "name");
  if (e.name.empty()) bad_data("empty name");
  e.bgg_id = field<int>(row, "bgg_id");
  e.bgg_rating = field<double>(row, "bgg_rating");
  e.core_loc = field<int>(row, "core_loc");
  e.implemented = field<bool>(row, "implemented");
  const std::string where = " in '" + e.name + "'";
  if (e.bgg_rating < 1.0 || e.bgg_rating > 10.0) bad_data("rating out of range" + where);
  if (e.core_loc <= 0) bad_data("core_loc must be positive" + where);

  const auto gui = parse_gui_value(field<std::string>(row, "gui_value"));
  if (!gui) bad_data("bad gui_value" + where);
  e.gui_value = *gui;
  const auto players = parse_players(field<std::string>(row, "players"));
  if (!players) bad_data("bad players" + where);
  e.players = *players;
  const auto category = parse_category(field<std::string>(row, "category"));
  if (!category) bad_data("bad category" + where);
  e.category = *category;
  for (const auto& name : field<std::vector<std::string>>(row, "topics")) {
    const auto topic = parse_topic(name);
    if (!topic) bad_data("unknown topic '" + name + "'" + where);
    if (!e.has_topic(*topic)) e.topics.push_back(*topic);
  }
  if (e.topics.empty()) bad_data("no topics" + where);
  return e;
}

}  // namespace

std::string_view to_string(Topic topic) { return kTopics[static_cast<std::size_t>(topic)].name; }

std::string_view comment(Topic topic) { return kTopics[static_cast<std::size_t>(topic)].comment; }

std::optional<Topic> parse_topic(std::string_view text) {
  for (const TopicInfo& info : kTopics) {
    if (iequals(text, info.name) || iequals(text, info.alias)) return info.topic;
  }
  return std::nullopt;
}

std::string_view to_string(Category category) {
  return kCategories[static_cast<std::size_t>(category)];
}

std::optional<Category> parse_category(std::string_view text) {
  for (std::size_t i = 0; i < kCategories.size(); ++i) {
    if (iequals(text, kCategories[i])) return static_cast<Category>(i);
  }
  return std::nullopt;
}

std::string_view to_string(GuiValue gui) { return gui == GuiValue::kHigh ? "High" : "Low"; }

std::optional<GuiValue> parse_gui_value(std::string_view text) {
  if (iequals(text, "low")) return GuiValue::kLow;
  if (iequals(text, "high")) return GuiValue::kHigh;
  return std::nullopt;
}

bool Players::admits(int count) const {
  return count >= min && (!max || count <= *max);
}

std::string Players::to_string() const {
  if (!max) return std::to_string(min) + "+";
  if (*max == min) return std::to_string(min);
  return std::to_string(min) + "-" + std::to_string(*max);
}

std::optional<Players> parse_players(std::string_view text) {
  Players p;
  if (text.ends_with('+')) {
    const auto min = engine::parse_int(text.substr(0, text.size() - 1));
    if (!min || *min < 1) return std::nullopt;
    p.min = *min;
    return p;
  }
  const std::size_t dash = text.find('-');
  const auto min = engine::parse_int(text.substr(0, dash));
  if (!min || *min < 1) return std::nullopt;
  p.min = *min;
  p.max = *min;
  if (dash != std::string_view::npos) {
    const auto max = engine::parse_int(text.substr(dash + 1));
    if (!max || *max < *min) return std::nullopt;
    p.max = *max;
  }
  return p;
}

std::string CatalogEntry::bgg_url() const {
  return "https://boardgamegeek.com/boardgame/" + std::to_string(bgg_id);
}

bool CatalogEntry::has_topic(Topic topic) const {
  return std::find(topics.begin(), topics.end(), topic) != topics.end();
}

Catalog parse_catalog(std::string_view json_text) {
  Json doc;
  try {
    doc = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    bad_data(e.what());
  }
  if (!doc.is_array()) bad_data("top level must be an array");
  Catalog out;
  std::set<std::string> names;
  for (const Json& row : doc) {
    CatalogEntry e = parse_entry(row);
    if (!names.insert(e.name).second) bad_data("duplicate name '" + e.name + "'");
    out.push_back(std::move(e));
  }
  return out;
}

const Catalog& load_catalog() {
  static const Catalog bundled = parse_catalog(detail::kBundledCatalog);
  return bundled;
}

Catalog load_catalog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad_data("cannot open " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_catalog(text.str());
}

const CatalogEntry* find(const Catalog& catalog, std::string_view name) {
  for (const CatalogEntry& e : catalog) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

Catalog filter(const Catalog& entries, const Query& q) {
  Catalog out;
  for (const CatalogEntry& e : entries) {
    if (q.topic && !e.has_topic(*q.topic)) continue;
    if (q.category && e.category != *q.category) continue;
    if (q.max_loc && e.core_loc > *q.max_loc) continue;
    if (q.player_count && !e.players.admits(*q.player_count)) continue;
    if (q.min_rating && e.bgg_rating < *q.min_rating) continue;
    if (q.gui_value && e.gui_value != *q.gui_value) continue;
    out.push_back(e);
  }
  return out;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kPass: return "pass";
    case Verdict::kWarn: return "warn";
    case Verdict::kManual: return "manual";
  }
  return "manual";
}

CriteriaReport validate(const CatalogEntry& entry) {
  CriteriaReport r;
  auto set = [&](int n, Verdict v, std::string text) {
    r.criteria[static_cast<std::size_t>(n - 1)] = {n, v, std::move(text)};
  };
  set(1, Verdict::kManual, "Short sessions and compact, codeable rules");
  set(2, entry.players.max == 1 ? Verdict::kWarn : Verdict::kPass,
      "Two or more players; solo games are tolerated");
  set(3, Verdict::kManual, "Shared information, playable on one screen");
  set(4, entry.bgg_id > 0 ? Verdict::kPass : Verdict::kWarn, "Has a BoardGameGeek page");
  set(5, Verdict::kManual, "Not a fixed-problem solo puzzle");
  set(6, Verdict::kManual, "No bulk data entry or custom artwork");
  set(7, Verdict::kManual, "No language-dependent components");
  set(8, entry.bgg_rating >= 5.0 ? Verdict::kPass : Verdict::kWarn,
      "BoardGameGeek rating of at least 5.0");
  return r;
}

}  // namespace boardforge::catalog
