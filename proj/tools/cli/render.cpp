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

#include <cmath>
#include <iomanip>
#include <sstream>

#include "cli.hpp"

namespace boardforge::cli {
namespace {

using engine::Json;

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const std::string& item : items) {
    if (!out.empty()) out += sep;
    out += item;
  }
  return out;
}

std::string number(double value) {
  if (value == std::floor(value) && std::abs(value) < 1e15) {
    return std::to_string(static_cast<long long>(value));
  }
  std::ostringstream s;
  s << value;
  return s.str();
}

void render_pig(std::ostream& os, const Json& v) {
  os << "Pig, first to " << v.at("target").get<int>() << "\n";
  const auto& scores = v.at("scores");
  for (std::size_t i = 0; i < scores.size(); ++i) {
    os << "  seat " << i << ": " << scores[i].get<int>() << "\n";
  }
  os << "Turn total: " << v.at("turn_total").get<int>() << "\n";
}

void render_mastermind(std::ostream& os, const Json& v) {
  os << "Mastermind, " << v.at("guesses_left").get<int>() << " of "
     << v.at("max_guesses").get<int>() << " guesses left\n";
  const auto& rows = v.at("rows");
  if (rows.empty()) os << "  no guesses yet\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    os << "  " << std::setw(2) << i + 1 << ". " << rows[i].at("guess").get<std::string>()
       << "  black " << rows[i].at("black").get<int>() << "  white "
       << rows[i].at("white").get<int>() << "\n";
  }
  if (v.contains("secret")) os << "Secret: " << v.at("secret").get<std::string>() << "\n";
}

void render_kalah(std::ostream& os, const Json& v) {
  const int n = v.at("pits_per_side").get<int>();
  const auto north = v.at("north").get<std::vector<int>>();
  const auto south = v.at("south").get<std::vector<int>>();
  const auto stores = v.at("stores").get<std::vector<int>>();
  os << "Kalah\n";
  os << "  pit  ";
  for (int k = n; k >= 1; --k) os << std::setw(2) << k;
  os << "\n  north";
  for (int k = n - 1; k >= 0; --k) os << std::setw(2) << north[static_cast<std::size_t>(k)];
  os << "   store " << stores[1] << "\n  south";
  for (int k = 0; k < n; ++k) os << std::setw(2) << south[static_cast<std::size_t>(k)];
  os << "   store " << stores[0] << "\n  pit  ";
  for (int k = 1; k <= n; ++k) os << std::setw(2) << k;
  os << "\n";
}

void render_nothanks(std::ostream& os, const Json& v) {
  os << "No Thanks!\n";
  if (v.at("face_up").is_null()) {
    os << "Card: none";
  } else {
    os << "Card: " << v.at("face_up").get<int>();
  }
  os << "  pot " << v.at("pot").get<int>() << "  deck " << v.at("cards_remaining").get<int>()
     << "\n";
  const auto& players = v.at("players");
  for (std::size_t i = 0; i < players.size(); ++i) {
    std::vector<std::string> cards;
    for (const auto& c : players[i].at("cards")) cards.push_back(std::to_string(c.get<int>()));
    os << "  seat " << i << ": chips " << players[i].at("chips").get<int>() << ", score "
       << players[i].at("provisional").get<int>() << ", cards "
       << (cards.empty() ? "-" : join(cards, " ")) << "\n";
  }
}

void render_othello(std::ostream& os, const Json& v) {
  os << "Othello\n   a b c d e f g h\n";
  const auto& board = v.at("board");
  for (std::size_t r = 0; r < board.size(); ++r) {
    os << " " << r + 1;
    for (char c : board[r].get<std::string>()) os << ' ' << c;
    os << "\n";
  }
  os << "Discs: black " << v.at("black").get<int>() << ", white " << v.at("white").get<int>()
     << "\n";
}

void render_blackbox(std::ostream& os, const Json& v) {
  os << "Black Box\n";
  const auto& rounds = v.at("rounds");
  if (rounds.empty()) return;
  const Json& round = rounds.back();
  std::vector<std::string> grid(8, std::string(8, '.'));
  auto mark = [&](const Json& cells, char c) {
    for (const auto& cell : cells) {
      const std::string name = cell.get<std::string>();
      grid[static_cast<std::size_t>(name[1] - '1')][static_cast<std::size_t>(name[0] - 'a')] = c;
    }
  };
  if (round.contains("atoms")) {
    mark(round.at("guess"), 'x');
    mark(round.at("atoms"), 'O');
  }
  os << "      ";
  for (int c = 0; c < 8; ++c) os << std::setw(3) << 32 - c;
  os << "\n      ";
  for (int c = 0; c < 8; ++c) os << "  " << static_cast<char>('a' + c);
  os << "\n";
  for (int r = 0; r < 8; ++r) {
    os << std::setw(3) << 1 + r << "   ";
    for (char c : grid[static_cast<std::size_t>(r)]) os << "  " << c;
    os << std::setw(4) << 24 - r << "\n";
  }
  os << "      ";
  for (int c = 0; c < 8; ++c) os << std::setw(3) << 9 + c;
  os << "\n";
  for (std::size_t i = 0; i < rounds.size(); ++i) {
    const Json& r = rounds[i];
    os << "Round " << i + 1 << ", seeker seat " << r.at("seeker").get<int>() << ", spent "
       << r.at("spent").get<int>();
    if (r.contains("score")) os << ", score " << r.at("score").get<int>();
    os << "\n";
    for (const auto& shot : r.at("shots")) {
      os << "  ray " << shot.at("port").get<int>() << ": " << shot.at("outcome").get<std::string>();
      if (shot.contains("exit_port")) os << " " << shot.at("exit_port").get<int>();
      os << "\n";
    }
  }
}

void render_pushfight(std::ostream& os, const Json& v) {
  os << "Push Fight, " << v.at("phase").get<std::string>() << " phase\n   a b c d e f g h\n";
  const auto& board = v.at("board");
  for (std::size_t r = 0; r < board.size(); ++r) {
    os << " " << r + 1;
    for (char c : board[r].get<std::string>()) os << ' ' << c;
    os << "\n";
  }
  os << "Anchor: " << (v.at("anchor").is_null() ? "none" : v.at("anchor").get<std::string>());
  if (v.at("phase") == "play") os << ", moves left " << v.at("moves_left").get<int>();
  os << "\n";
}

void render_view(std::ostream& os, const std::string& game, const Json& v) {
  if (game == "pig") return render_pig(os, v);
  if (game == "mastermind") return render_mastermind(os, v);
  if (game == "kalah" || game.starts_with("kalah-")) return render_kalah(os, v);
  if (game == "nothanks") return render_nothanks(os, v);
  if (game == "othello") return render_othello(os, v);
  if (game == "blackbox") return render_blackbox(os, v);
  if (game == "pushfight") return render_pushfight(os, v);
  os << v.dump(2) << "\n";
}

}  // namespace

std::string render_text(const engine::Observation& o) {
  std::ostringstream os;
  render_view(os, o.game_id, o.view);
  if (o.result) {
    std::vector<std::string> parts;
    for (std::size_t i = 0; i < o.result->size(); ++i) {
      const engine::SeatResult& r = (*o.result)[i];
      std::string part = "seat " + std::to_string(i) + " " + std::string(engine::to_string(r.outcome));
      if (r.score) part += " (" + number(*r.score) + ")";
      parts.push_back(part);
    }
    os << "Result: " << join(parts, ", ") << "\n";
    return os.str();
  }
  if (o.turn) os << "Seat " << *o.turn << " to move\n";
  if (o.legal_moves.size() > 40) {
    os << "Moves: " << o.legal_moves.size() << " options, " << o.legal_moves.front() << " .. "
       << o.legal_moves.back() << "\n";
  } else if (!o.legal_moves.empty()) {
    os << "Moves: " << join(o.legal_moves, ", ") << "\n";
  }
  for (const std::string& pattern : o.move_patterns) os << "Also: " << pattern << "\n";
  return os.str();
}

}  // namespace boardforge::cli
