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
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "boardforge/ai/search.hpp"
#include "boardforge/engine/match.hpp"
#include "boardforge/engine/registry.hpp"

namespace boardforge::testing {

using engine::Json;

// Seat counts exercised per game.
std::vector<int> seat_options(std::string_view game);
std::vector<std::string> all_games();

// Picks the next token for a playout: uniform over legal moves, hold-at-20
// for Pig, and for Black Box an occasional random four-cell guess.
class PlayoutPolicy {
 public:
  explicit PlayoutPolicy(std::uint64_t seed) : gen_(seed) {}
  std::string choose(const engine::Match& match, int seat);
  std::mt19937_64& gen() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

struct PlayoutStats {
  int plies = 0;
  bool finished = false;
};

// Plays from a fresh match until it finishes or max_plies is reached,
// calling on_ply after every accepted move.
PlayoutStats random_playout(engine::Match& match, std::uint64_t policy_seed,
                            int max_plies,
                            const std::function<void(const engine::Match&, const engine::Events&)>&
                                on_ply = {});

// Token grammar oracle, written from the published grammar.
std::optional<std::string> oracle_normalize(std::string_view raw);
bool oracle_well_formed(std::string_view game, std::string_view normalized, int kalah_pits = 6);

// Malformed, out-of-grammar and well-formed-but-illegal candidates.
std::string adversarial_token(std::mt19937_64& gen, std::string_view game);

struct MinimaxResult {
  double value = 0;
  std::string move;
  std::uint64_t nodes = 0;
};

// Plain depth-limited minimax, no pruning, same conventions as alphabeta.
MinimaxResult plain_minimax(const engine::GameRules& rules, const engine::GameState& root,
                            int depth, const ai::EvalFn& eval);

// Game-theoretic value for the seat to move: +1 win, 0 draw, -1 loss.
int solve_exhaustive(const engine::GameRules& rules, const engine::GameState& state);

// Mastermind feedback from colour histograms.
std::pair<int, int> oracle_feedback(const std::array<int, 4>& secret, const std::array<int, 4>& guess);

// Black Box ray tracer using explicit position and direction vectors.
// Returns -1 for a hit, 0 for a reflection, else the exit port.
int oracle_trace(const std::vector<int>& atom_cells, int port);

// Flood fill through empty masked cells.
std::vector<int> oracle_flood(const std::vector<std::string>& board_rows, int row, int col);

// Direction-scan placements for the side whose glyph is `me` on an 8x8
// board of 'B', 'W', '.' rows.
std::vector<std::string> oracle_othello_moves(const std::vector<std::string>& rows, char me);

// Largest Bellman residual of a Pig win-probability function over all
// non-terminal states, evaluated from the recurrence.
double oracle_pig_residual(const std::function<double(int, int, int)>& p, int target);

// Fraction of games the first player wins when both use `roll`, in an
// independent simulator.
double simulate_pig(const std::function<bool(int, int, int)>& first_rolls,
                    const std::function<bool(int, int, int)>& second_rolls, int target, int games,
                    std::uint64_t seed, bool alternate_start);

// Keys anywhere in `doc` (objects at any depth).
bool contains_key(const Json& doc, std::string_view key);
bool contains_string(const Json& doc, std::string_view needle);

}  // namespace boardforge::testing
