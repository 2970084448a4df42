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

#include "boardforge/ai/search.hpp"

#include <limits>

namespace boardforge::ai {
namespace {

class AlphaBeta {
 public:
  AlphaBeta(const engine::GameRules& rules, const EvalFn& eval, int root_seat)
      : rules_(rules), eval_(eval), root_seat_(root_seat) {}

  double search(const engine::GameState& state, int depth, double alpha,
                double beta, std::string* best_move) {
    ++nodes_;
    if (auto result = rules_.terminal(state)) return terminal_value(*result, root_seat_);
    if (depth == 0) return eval_(state, root_seat_);

    const int seat = *rules_.to_move(state);
    const bool maximizing = seat == root_seat_;
    double best = maximizing ? -std::numeric_limits<double>::infinity()
                             : std::numeric_limits<double>::infinity();
    for (const std::string& token : rules_.legal_moves(state, seat)) {
      std::unique_ptr<engine::GameState> child = state.clone();
      rules_.apply(*child, seat, token, rng_);
      const double value = search(*child, depth - 1, alpha, beta, nullptr);
      if (maximizing ? value > best : value < best) {
        best = value;
        if (best_move) *best_move = token;
      }
      if (maximizing) {
        alpha = std::max(alpha, best);
      } else {
        beta = std::min(beta, best);
      }
      if (alpha >= beta) break;
    }
    return best;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  const engine::GameRules& rules_;
  const EvalFn& eval_;
  int root_seat_;
  engine::Rng rng_{1};
  std::uint64_t nodes_ = 0;
};

}  // namespace

double terminal_value(const engine::Result& result, int seat) {
  switch (result[static_cast<std::size_t>(seat)].outcome) {
    case engine::Outcome::kWin: return kWinScore;
    case engine::Outcome::kLoss: return -kWinScore;
    case engine::Outcome::kDraw: return 0.0;
  }
  return 0.0;
}

SearchResult alphabeta(const engine::GameRules& rules,
                       const engine::GameState& root, int depth,
                       const EvalFn& eval) {
  if (depth < 1) engine::fail(engine::ErrorCode::kInvalidArgument, "search depth must be >= 1");
  const std::optional<int> seat = rules.to_move(root);
  if (!seat || rules.terminal(root)) {
    engine::fail(engine::ErrorCode::kInvalidArgument, "cannot search a finished position");
  }
  AlphaBeta search(rules, eval, *seat);
  SearchResult out;
  out.value = search.search(root, depth, -std::numeric_limits<double>::infinity(),
                            std::numeric_limits<double>::infinity(), &out.move);
  out.nodes = search.nodes();
  return out;
}

}  // namespace boardforge::ai
