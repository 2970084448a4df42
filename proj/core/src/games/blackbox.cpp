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

#include "boardforge/games/blackbox.hpp"

#include <algorithm>
#include <stdexcept>

#include "boardforge/engine/token.hpp"

namespace boardforge::games::blackbox {
namespace {

struct Vec {
  int dr = 0;
  int dc = 0;
};

Vec left_of(Vec d) { return {-d.dc, d.dr}; }
Vec right_of(Vec d) { return {d.dc, -d.dr}; }

bool in_grid(int r, int c) { return r >= 0 && r < kSize && c >= 0 && c < kSize; }

bool atom_at(const AtomSet& atoms, int r, int c) {
  return in_grid(r, c) && atoms[static_cast<std::size_t>(r * kSize + c)];
}

int exit_port(int r, int c, Vec d) {
  if (d.dc == 1) return 24 - r;
  if (d.dr == -1) return 32 - c;
  if (d.dc == -1) return 1 + r;
  return 9 + c;
}

const char* kind_name(RayKind kind) {
  switch (kind) {
    case RayKind::kHit: return "hit";
    case RayKind::kReflect: return "reflect";
    case RayKind::kExit: return "exit";
  }
  return "hit";
}

Json shot_json(const Shot& shot) {
  Json j = {{"port", shot.port}, {"outcome", kind_name(shot.outcome.kind)}};
  if (shot.outcome.kind == RayKind::kExit) j["exit_port"] = shot.outcome.exit_port;
  return j;
}

int shot_cost(std::span<const Shot> shots) {
  int cost = 0;
  for (const Shot& s : shots) cost += s.outcome.kind == RayKind::kExit ? 2 : 1;
  return cost;
}

}  // namespace

std::optional<int> parse_cell(std::string_view name) {
  if (name.size() != 2) return std::nullopt;
  const int col = name[0] - 'a';
  const int row = name[1] - '1';
  if (!in_grid(row, col)) return std::nullopt;
  return row * kSize + col;
}

std::string cell_name(int cell) {
  return {static_cast<char>('a' + cell % kSize), static_cast<char>('1' + cell / kSize)};
}

std::string to_string(const RayOutcome& outcome) {
  if (outcome.kind == RayKind::kExit) return "exit " + std::to_string(outcome.exit_port);
  return kind_name(outcome.kind);
}

AtomSet atom_set(std::span<const int> cells) {
  AtomSet atoms{};
  for (int cell : cells) atoms[static_cast<std::size_t>(cell)] = true;
  return atoms;
}

RayOutcome trace(const AtomSet& atoms, int port) {
  if (port < 1 || port > kPorts) {
    engine::fail(engine::ErrorCode::kBadToken, "no port " + std::to_string(port));
  }
  int r = 0;
  int c = 0;
  Vec d;
  if (port <= 8) {
    r = port - 1, c = -1, d = {0, 1};
  } else if (port <= 16) {
    r = kSize, c = port - 9, d = {-1, 0};
  } else if (port <= 24) {
    r = 7 - (port - 17), c = kSize, d = {0, -1};
  } else {
    r = -1, c = 7 - (port - 25), d = {1, 0};
  }

  bool inside = false;
  // A ray visits each (cell, heading) at most once, so 4 * 64 steps plus
  // turns bound any path.
  for (int step = 0; step < 4 * kCells * 4; ++step) {
    const int fr = r + d.dr;
    const int fc = c + d.dc;
    if (!in_grid(fr, fc)) {
      const int out = exit_port(r, c, d);
      if (out == port) return {RayKind::kReflect, 0};
      return {RayKind::kExit, out};
    }
    if (atom_at(atoms, fr, fc)) return {RayKind::kHit, 0};
    const Vec l = left_of(d);
    const Vec rt = right_of(d);
    const bool ahead_left = atom_at(atoms, fr + l.dr, fc + l.dc);
    const bool ahead_right = atom_at(atoms, fr + rt.dr, fc + rt.dc);
    if (ahead_left || ahead_right) {
      if (!inside) return {RayKind::kReflect, 0};
      if (ahead_left && ahead_right) {
        d = {-d.dr, -d.dc};
      } else {
        d = ahead_left ? rt : l;
      }
      continue;
    }
    r = fr;
    c = fc;
    inside = true;
  }
  throw std::logic_error("black box ray did not terminate");
}

int score(std::span<const Shot> shots, std::span<const int> guess,
          std::span<const int> atoms) {
  std::vector<int> cells(guess.begin(), guess.end());
  std::sort(cells.begin(), cells.end());
  if (cells.size() != static_cast<std::size_t>(kAtoms) ||
      std::adjacent_find(cells.begin(), cells.end()) != cells.end()) {
    illegal("a guess names exactly four distinct cells");
  }
  int misplaced = 0;
  for (int cell : cells) {
    if (std::find(atoms.begin(), atoms.end(), cell) == atoms.end()) ++misplaced;
  }
  return shot_cost(shots) + 5 * misplaced;
}

std::vector<int> draw_atoms(engine::Rng& rng) {
  std::vector<int> atoms;
  while (atoms.size() < static_cast<std::size_t>(kAtoms)) {
    const int cell = static_cast<int>(rng.below(kCells));
    if (std::find(atoms.begin(), atoms.end(), cell) == atoms.end()) atoms.push_back(cell);
  }
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

State Rules::initial(int seats, engine::Rng& rng) const {
  State s;
  s.seats = seats;
  s.rounds.push_back({0, draw_atoms(rng), {}, std::nullopt, 0});
  return s;
}

std::optional<int> Rules::mover(const State& state) const {
  const Round& round = state.rounds.back();
  if (round.guess) return std::nullopt;
  return round.seeker;
}

std::vector<std::string> Rules::legal(const State&, int) const {
  std::vector<std::string> out;
  for (int port = 1; port <= kPorts; ++port) out.push_back("ray " + std::to_string(port));
  return sorted(std::move(out));
}

std::vector<std::string> Rules::patterns(const State&, int) const {
  return {"guess CELL CELL CELL CELL"};
}

Events Rules::play(State& state, int seat, std::string_view token,
                   engine::Rng& rng) const {
  const auto words = engine::split_words(token);
  Round& round = state.rounds.back();
  if (words.size() == 2 && words[0] == "ray") {
    const std::optional<int> port = engine::parse_int(words[1]);
    if (!port || *port < 1 || *port > kPorts) bad_token("Black Box", token);
    const RayOutcome outcome = trace(atom_set(round.atoms), *port);
    round.shots.push_back({*port, outcome});
    Json detail = shot_json(round.shots.back());
    detail["seat"] = seat;
    return {{"ray", detail}};
  }
  if (words.empty() || words[0] != "guess") bad_token("Black Box", token);
  std::vector<int> cells;
  for (std::size_t i = 1; i < words.size(); ++i) {
    const std::optional<int> cell = parse_cell(words[i]);
    if (!cell) bad_token("Black Box", token);
    cells.push_back(*cell);
  }
  const int total = score(round.shots, cells, round.atoms);
  std::sort(cells.begin(), cells.end());
  round.guess = cells;
  round.score = total;

  Json atoms = Json::array();
  for (int a : round.atoms) atoms.push_back(cell_name(a));
  Events events{{"reveal", {{"seat", seat}, {"atoms", atoms}, {"score", total}}}};
  if (static_cast<int>(state.rounds.size()) < state.seats) {
    const int next_seeker = static_cast<int>(state.rounds.size());
    state.rounds.push_back({next_seeker, draw_atoms(rng), {}, std::nullopt, 0});
    events.push_back({"round", {{"seeker", next_seeker}}});
  }
  return events;
}

std::optional<Result> Rules::result(const State& state) const {
  if (static_cast<int>(state.rounds.size()) < state.seats || !state.rounds.back().guess) {
    return std::nullopt;
  }
  if (state.seats == 1) {
    const Round& round = state.rounds.front();
    const int perfect = shot_cost(round.shots);
    return Result{{round.score == perfect ? engine::Outcome::kWin : engine::Outcome::kLoss,
                   double(round.score)}};
  }
  std::vector<double> scores(2);
  for (const Round& round : state.rounds) {
    scores[static_cast<std::size_t>(round.seeker)] = round.score;
  }
  return lowest_score_result(scores);
}

Json Rules::view(const State& state, std::optional<int>) const {
  Json rounds = Json::array();
  for (const Round& round : state.rounds) {
    Json shots = Json::array();
    for (const Shot& shot : round.shots) shots.push_back(shot_json(shot));
    Json r = {{"seeker", round.seeker}, {"shots", shots}, {"spent", shot_cost(round.shots)}};
    if (round.guess) {
      Json guess = Json::array();
      Json atoms = Json::array();
      for (int g : *round.guess) guess.push_back(cell_name(g));
      for (int a : round.atoms) atoms.push_back(cell_name(a));
      r["guess"] = guess;
      r["atoms"] = atoms;
      r["score"] = round.score;
    }
    rounds.push_back(std::move(r));
  }
  return {{"mode", state.seats == 1 ? "solo" : "duel"}, {"rounds", rounds}};
}

}  // namespace boardforge::games::blackbox
