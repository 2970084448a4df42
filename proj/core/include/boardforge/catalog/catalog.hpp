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

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace boardforge::catalog {

enum class Topic {
  kBasics,          // Assignments, simple branches and loops.
  kArrays,          // One-dimensional arrays and lists.
  kArrays2D,        // Two-dimensional arrays
  kAlgorithms,      // Basic algorithms (searching, sorting, etc.)
  kAlgorithmsPlus,  // More advanced algorithms like matrix transposition and/or tricky techniques.
  kGraphs,          // Graph representations and algorithms
};

inline constexpr std::array<Topic, 6> kAllTopics = {
    Topic::kBasics,     Topic::kArrays,          Topic::kArrays2D,
    Topic::kAlgorithms, Topic::kAlgorithmsPlus, Topic::kGraphs};

// Display names as printed in the collection ("2D Arrays", "Algorithms+").
std::string_view to_string(Topic topic);
std::string_view comment(Topic topic);
// Accepts the display name or the enumerator spelling ("Arrays2D",
// "AlgorithmsPlus"), case-insensitively.
std::optional<Topic> parse_topic(std::string_view text);

enum class Category { kDice, kDeduction, kAbstract, kCards, kEconomic };

std::string_view to_string(Category category);
std::optional<Category> parse_category(std::string_view text);

enum class GuiValue { kLow, kHigh };

std::string_view to_string(GuiValue gui);
std::optional<GuiValue> parse_gui_value(std::string_view text);

struct Players {
  int min = 1;
  std::optional<int> max;  // nullopt: no upper bound ("2+")

  bool admits(int count) const;
  std::string to_string() const;
  friend bool operator==(const Players&, const Players&) = default;
};

// "2", "1-6", "2+".
std::optional<Players> parse_players(std::string_view text);

struct CatalogEntry {
  std::string name;
  int bgg_id = 0;
  double bgg_rating = 0.0;
  int core_loc = 0;
  GuiValue gui_value = GuiValue::kLow;
  Players players;
  Category category = Category::kDice;
  std::vector<Topic> topics;
  bool implemented = false;

  std::string bgg_url() const;
  bool has_topic(Topic topic) const;
};

using Catalog = std::vector<CatalogEntry>;

// The bundled collection, in its published order. Throws Error(kDataError)
// if the embedded data is malformed.
const Catalog& load_catalog();
Catalog parse_catalog(std::string_view json_text);
Catalog load_catalog(const std::filesystem::path& path);

const CatalogEntry* find(const Catalog& catalog, std::string_view name);

struct Query {
  std::optional<Topic> topic;
  std::optional<Category> category;
  std::optional<int> max_loc;
  std::optional<int> player_count;
  std::optional<double> min_rating;
  std::optional<GuiValue> gui_value;
};

Catalog filter(const Catalog& entries, const Query& query);

enum class Verdict { kPass, kWarn, kManual };

std::string_view to_string(Verdict verdict);

struct CriterionResult {
  int number = 0;  // 1..8
  Verdict verdict = Verdict::kManual;
  std::string description;
};

struct CriteriaReport {
  std::array<CriterionResult, 8> criteria;

  const CriterionResult& criterion(int number) const { return criteria.at(number - 1); }
};

CriteriaReport validate(const CatalogEntry& entry);

}  // namespace boardforge::catalog
