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

#include "boardforge/games/mastermind.hpp"

#include <algorithm>

#include "boardforge/engine/token.hpp"

namespace boardforge::games::mastermind {
namespace {

const std::vector<std::string>& prefixed_tokens(std::string_view verb) {
  static const auto build = [](std::string_view v) {
    std::vector<std::string> tokens;
    tokens.reserve(kCodeCount);
    for (const Code& code : all_codes()) {
      tokens.push_back(std::string(v) + " " + format_code(code));
    }
    return tokens;
  };
  static const std::vector<std::string> secrets = build("secret");
  static const std::vector<std::string> guesses = build("guess");
  return verb == "secret" ? secrets : guesses;
}

}  // namespace

Feedback feedback(const Code& secret, const Code& guess) {
  Feedback fb;
  std::array<int, kColors + 1> in_secret{};
  std::array<int, kColors + 1> in_guess{};
  for (int i = 0; i < kPegs; ++i) {
    if (secret[i] == guess[i]) ++fb.black;
    ++in_secret[secret[i]];
    ++in_guess[guess[i]];
  }
  int common = 0;
  for (int c = 1; c <= kColors; ++c) common += std::min(in_secret[c], in_guess[c]);
  fb.white = common - fb.black;
  return fb;
}

std::optional<Code> parse_code(std::string_view digits) {
  if (digits.size() != kPegs) return std::nullopt;
  Code code{};
  for (int i = 0; i < kPegs; ++i) {
    const char c = digits[static_cast<std::size_t>(i)];
    if (c < '1' || c > '0' + kColors) return std::nullopt;
    code[i] = c - '0';
  }
  return code;
}

std::string format_code(const Code& code) {
  std::string out;
  for (int d : code) out.push_back(static_cast<char>('0' + d));
  return out;
}

const std::vector<Code>& all_codes() {
  static const std::vector<Code> codes = [] {
    std::vector<Code> out;
    out.reserve(kCodeCount);
    for (int i = 0; i < kCodeCount; ++i) {
      Code code{};
      int rest = i;
      for (int p = kPegs - 1; p >= 0; --p) {
        code[p] = rest % kColors + 1;
        rest /= kColors;
      }
      out.push_back(code);
    }
    return out;
  }();
  return codes;
}

int code_index(const Code& code) {
  int index = 0;
  for (int d : code) index = index * kColors + (d - 1);
  return index;
}

int breaker_seat(const State& state) { return state.seats == 1 ? 0 : 1; }

bool solved(const State& state) {
  return !state.rows.empty() && state.rows.back().result.black == kPegs;
}

std::string Rules::public_token(std::string_view token) const {
  if (token.starts_with("secret ")) return "secret ****";
  return std::string(token);
}

State Rules::initial(int seats, engine::Rng& rng) const {
  State s;
  s.seats = seats;
  if (seats == 1) {
    Code secret{};
    for (int& d : secret) d = static_cast<int>(rng.below(kColors)) + 1;
    s.secret = secret;
    s.phase = Phase::kGuessing;
  }
  return s;
}

std::optional<int> Rules::mover(const State& state) const {
  switch (state.phase) {
    case Phase::kAwaitSecret: return 0;
    case Phase::kGuessing: return breaker_seat(state);
    case Phase::kDone: return std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::string> Rules::legal(const State& state, int) const {
  return prefixed_tokens(state.phase == Phase::kAwaitSecret ? "secret" : "guess");
}

Events Rules::play(State& state, int, std::string_view token,
                   engine::Rng&) const {
  const auto words = engine::split_words(token);
  if (words.size() != 2 || (words[0] != "secret" && words[0] != "guess")) {
    bad_token("Mastermind", token);
  }
  const std::optional<Code> code = parse_code(words[1]);
  if (!code) bad_token("Mastermind", token);

  if (words[0] == "secret") {
    if (state.phase != Phase::kAwaitSecret) illegal("the secret is already set");
    state.secret = *code;
    state.phase = Phase::kGuessing;
    return {{"secret_set", Json::object()}};
  }
  if (state.phase != Phase::kGuessing) illegal("the secret is not set yet");
  const Feedback fb = feedback(*state.secret, *code);
  state.rows.push_back({*code, fb});
  if (fb.black == kPegs || static_cast<int>(state.rows.size()) >= kMaxGuesses) {
    state.phase = Phase::kDone;
  }
  return {{"feedback",
           {{"guess", format_code(*code)}, {"black", fb.black}, {"white", fb.white}}}};
}

std::optional<Result> Rules::result(const State& state) const {
  if (state.phase != Phase::kDone) return std::nullopt;
  const bool won = solved(state);
  const double used = static_cast<double>(state.rows.size());
  if (state.seats == 1) {
    return Result{{won ? engine::Outcome::kWin : engine::Outcome::kLoss, used}};
  }
  return winner_result(2, won ? 1 : 0, {0.0, used});
}

Json Rules::view(const State& state, std::optional<int> viewer) const {
  Json rows = Json::array();
  for (const Row& row : state.rows) {
    rows.push_back({{"guess", format_code(row.guess)},
                    {"black", row.result.black},
                    {"white", row.result.white}});
  }
  const char* phase = state.phase == Phase::kAwaitSecret ? "await_secret"
                      : state.phase == Phase::kGuessing  ? "guessing"
                                                         : "done";
  Json out = {{"mode", state.seats == 1 ? "solo" : "duel"},
              {"phase", phase},
              {"rows", rows},
              {"max_guesses", kMaxGuesses},
              {"guesses_left", kMaxGuesses - static_cast<int>(state.rows.size())}};
  const bool codemaker = state.seats == 2 && viewer == 0;
  if (state.secret && (codemaker || state.phase == Phase::kDone)) {
    out["secret"] = format_code(*state.secret);
  }
  return out;
}

}  // namespace boardforge::games::mastermind
