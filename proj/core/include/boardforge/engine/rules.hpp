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

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <typeinfo>
#include <vector>

#include <nlohmann/json.hpp>

#include "boardforge/engine/error.hpp"
#include "boardforge/engine/rng.hpp"

namespace boardforge::engine {

using Json = nlohmann::json;

// Something a client must know about to render the consequence of a move.
// Events never carry information hidden from any seat.
struct Event {
  std::string kind;
  Json detail = Json::object();

  friend bool operator==(const Event&, const Event&) = default;
};
using Events = std::vector<Event>;

enum class Outcome { kWin, kLoss, kDraw };

std::string_view to_string(Outcome outcome);

struct SeatResult {
  Outcome outcome = Outcome::kDraw;
  std::optional<double> score;

  friend bool operator==(const SeatResult&, const SeatResult&) = default;
};
using Result = std::vector<SeatResult>;

Json to_json(const Result& result);
// Throws Error(kDataError).
Result result_from_json(const Json& json);

// Type-erased game state. Concrete games wrap their own value type in
// StateOf<T>.
class GameState {
 public:
  virtual ~GameState() = default;
  virtual std::unique_ptr<GameState> clone() const = 0;
  virtual bool equals(const GameState& other) const = 0;
};

template <typename T>
class StateOf final : public GameState {
 public:
  explicit StateOf(T value) : value(std::move(value)) {}

  std::unique_ptr<GameState> clone() const override {
    return std::make_unique<StateOf>(value);
  }
  bool equals(const GameState& other) const override {
    const auto* typed = dynamic_cast<const StateOf*>(&other);
    return typed != nullptr && typed->value == value;
  }

  T value;
};

// Uniform contract every game implements. apply() receives tokens that have
// already been normalized, and is only invoked for the seat to move of a
// non-terminal state; it throws Error(kBadToken) for text outside the game's
// grammar and Error(kIllegalMove) for well-formed moves the rules reject.
class GameRules {
 public:
  virtual ~GameRules() = default;

  virtual std::string_view id() const = 0;
  virtual std::string_view display_name() const = 0;
  virtual int min_seats() const = 0;
  virtual int max_seats() const = 0;

  virtual std::unique_ptr<GameState> initial_state(int seats, Rng& rng) const = 0;
  virtual std::optional<int> to_move(const GameState& state) const = 0;
  // Sorted lexicographically; empty unless `seat` is to move.
  virtual std::vector<std::string> legal_moves(const GameState& state,
                                               int seat) const = 0;
  // Parameterised move families too large to enumerate (for example a
  // four-cell guess on an 8x8 grid). Placeholders are upper-case words.
  virtual std::vector<std::string> move_patterns(const GameState& state,
                                                 int seat) const;
  virtual Events apply(GameState& state, int seat, std::string_view token,
                       Rng& rng) const = 0;
  virtual std::optional<Result> terminal(const GameState& state) const = 0;
  // Renderable, per-viewer view; nullopt viewer is a spectator.
  virtual Json observe(const GameState& state,
                       std::optional<int> viewer) const = 0;
  // How a token is echoed to other participants (hides secret entries).
  virtual std::string public_token(std::string_view token) const;
  // Rebuilds a full state from a public view. Only perfect-information
  // games support this; the rest return nullptr.
  virtual std::unique_ptr<GameState> restore(const Json& view) const;
};

// Adapter that lets a game be written against its own state type.
template <typename S>
class RulesFor : public GameRules {
 public:
  using State = S;

  static const S& state_of(const GameState& state) {
    return checked(&state)->value;
  }
  static S& state_of(GameState& state) {
    return const_cast<StateOf<S>*>(checked(&state))->value;
  }

  std::unique_ptr<GameState> initial_state(int seats, Rng& rng) const final {
    return std::make_unique<StateOf<S>>(initial(seats, rng));
  }
  std::optional<int> to_move(const GameState& state) const final {
    return mover(state_of(state));
  }
  std::vector<std::string> legal_moves(const GameState& state,
                                       int seat) const final {
    const S& s = state_of(state);
    if (result(s) || mover(s) != seat) return {};
    return legal(s, seat);
  }
  std::vector<std::string> move_patterns(const GameState& state,
                                         int seat) const final {
    const S& s = state_of(state);
    if (result(s) || mover(s) != seat) return {};
    return patterns(s, seat);
  }
  Events apply(GameState& state, int seat, std::string_view token,
               Rng& rng) const final {
    return play(state_of(state), seat, token, rng);
  }
  std::optional<Result> terminal(const GameState& state) const final {
    return result(state_of(state));
  }
  Json observe(const GameState& state, std::optional<int> viewer) const final {
    return view(state_of(state), viewer);
  }
  std::unique_ptr<GameState> restore(const Json& public_view) const final {
    std::optional<S> s = from_view(public_view);
    if (!s) return nullptr;
    return std::make_unique<StateOf<S>>(std::move(*s));
  }

 protected:
  virtual S initial(int seats, Rng& rng) const = 0;
  virtual std::optional<int> mover(const S& state) const = 0;
  virtual std::vector<std::string> legal(const S& state, int seat) const = 0;
  virtual std::vector<std::string> patterns(const S&, int) const { return {}; }
  virtual Events play(S& state, int seat, std::string_view token,
                      Rng& rng) const = 0;
  virtual std::optional<Result> result(const S& state) const = 0;
  virtual Json view(const S& state, std::optional<int> viewer) const = 0;
  virtual std::optional<S> from_view(const Json&) const { return std::nullopt; }

 private:
  static const StateOf<S>* checked(const GameState* state) {
    const auto* typed = dynamic_cast<const StateOf<S>*>(state);
    if (typed == nullptr) {
      fail(ErrorCode::kInvalidArgument,
           std::string("state does not belong to this game: ") +
               typeid(S).name());
    }
    return typed;
  }
};

}  // namespace boardforge::engine
