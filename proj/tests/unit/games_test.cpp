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

#include <algorithm>
#include <cctype>
#include <set>

#include <gtest/gtest.h>

#include "boardforge/engine/match.hpp"
#include "boardforge/games/blackbox.hpp"
#include "boardforge/games/builtin.hpp"
#include "boardforge/games/kalah.hpp"
#include "boardforge/games/mastermind.hpp"
#include "boardforge/games/nothanks.hpp"
#include "boardforge/games/othello.hpp"
#include "boardforge/games/pig.hpp"
#include "boardforge/games/pushfight.hpp"
#include "oracles.hpp"

namespace boardforge {
namespace {

using engine::ErrorCode;
using engine::Json;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const engine::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidArgument;
}

bool has_event(const engine::Events& events, std::string_view kind) {
  return std::any_of(events.begin(), events.end(), [&](const engine::Event& e) { return e.kind == kind; });
}

// Pig

TEST(Pig, RollingAOnePassesTheTurn) {
  games::pig::State s;
  s.turn_total = 9;
  games::pig::roll_with(s, 1);
  EXPECT_EQ(s.turn_total, 0);
  EXPECT_EQ(s.to_move, 1);
  EXPECT_EQ(s.scores, (std::array<int, 2>{0, 0}));
}

TEST(Pig, RollingKeepsTurn) {
  games::pig::State s;
  games::pig::roll_with(s, 4);
  EXPECT_EQ(s.turn_total, 4);
  EXPECT_EQ(s.to_move, 0);
}

TEST(Pig, HoldingPastTargetWins) {
  games::pig::State s;
  s.scores = {95, 40};
  s.turn_total = 6;
  games::pig::hold(s);
  EXPECT_EQ(s.scores[0], 101);
  EXPECT_EQ(games::pig::winner(s), 0);
}

TEST(Pig, ReachingTargetWithoutHoldingIsNotAWin) {
  games::pig::State s;
  s.scores = {98, 0};
  games::pig::roll_with(s, 5);
  EXPECT_FALSE(games::pig::winner(s));
}

TEST(Pig, DieMatchesRngDraw) {
  engine::Rng a(31), b(31);
  games::pig::State s;
  games::pig::roll(s, a);
  const int die = static_cast<int>(b.below(6)) + 1;
  EXPECT_EQ(die == 1 ? 0 : die, s.turn_total);
}

// Mastermind

games::mastermind::Code code(std::string_view digits) { return *games::mastermind::parse_code(digits); }

TEST(Mastermind, FeedbackExamples) {
  using games::mastermind::Feedback;
  EXPECT_EQ(games::mastermind::feedback(code("1123"), code("1123")), (Feedback{4, 0}));
  EXPECT_EQ(games::mastermind::feedback(code("1122"), code("2211")), (Feedback{0, 4}));
  EXPECT_EQ(games::mastermind::feedback(code("1132"), code("1221")), (Feedback{1, 2}));
}

TEST(Mastermind, FeedbackMatchesOracleAndIsSymmetric) {
  const auto& codes = games::mastermind::all_codes();
  ASSERT_EQ(codes.size(), 1296u);
  for (std::size_t i = 0; i < codes.size(); i += 7) {
    for (std::size_t j = 0; j < codes.size(); j += 5) {
      const auto f = games::mastermind::feedback(codes[i], codes[j]);
      const auto g = games::mastermind::feedback(codes[j], codes[i]);
      const auto [black, white] = testing::oracle_feedback(codes[i], codes[j]);
      ASSERT_EQ(f.black, black);
      ASSERT_EQ(f.white, white);
      ASSERT_EQ(f, g);
      ASSERT_LE(f.black + f.white, 4);
    }
  }
}

TEST(Mastermind, CodeParsing) {
  EXPECT_FALSE(games::mastermind::parse_code("1117"));
  EXPECT_FALSE(games::mastermind::parse_code("0111"));
  EXPECT_FALSE(games::mastermind::parse_code("111"));
  EXPECT_EQ(games::mastermind::format_code(code("6543")), "6543");
  EXPECT_EQ(games::mastermind::code_index(code("1111")), 0);
  EXPECT_EQ(games::mastermind::code_index(code("6666")), 1295);
}

TEST(Mastermind, DuelHidesSecretFromBreaker) {
  engine::Match m = engine::create_match(games::builtin_registry(), "mastermind", {"maker", "breaker"}, 4);
  EXPECT_EQ(m.to_move(), 0);
  m.submit(0, "secret 1234");
  EXPECT_EQ(m.to_move(), 1);
  EXPECT_EQ(m.observe(0).view.at("secret"), "1234");
  EXPECT_FALSE(m.observe(1).view.contains("secret"));
  EXPECT_FALSE(m.observe(std::nullopt).view.contains("secret"));
  EXPECT_EQ(m.rules().public_token("secret 1234"), "secret ****");
  EXPECT_EQ(code_of([&] { m.submit(1, "secret 1111"); }), ErrorCode::kIllegalMove);
  m.submit(1, "guess 1243");
  const auto rows = m.observe(1).view.at("rows");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].at("black"), 2);
  EXPECT_EQ(rows[0].at("white"), 2);
  m.submit(1, "guess 1234");
  ASSERT_TRUE(m.result());
  EXPECT_EQ((*m.result())[1].outcome, engine::Outcome::kWin);
  EXPECT_EQ(m.observe(1).view.at("secret"), "1234");
}

TEST(Mastermind, BreakerLosesAfterTenMisses) {
  engine::Match m = engine::create_match(games::builtin_registry(), "mastermind", {"maker", "breaker"}, 4);
  m.submit(0, "secret 6666");
  for (int i = 0; i < 10; ++i) m.submit(1, "guess 1111");
  ASSERT_TRUE(m.result());
  EXPECT_EQ((*m.result())[0].outcome, engine::Outcome::kWin);
  EXPECT_EQ((*m.result())[1].outcome, engine::Outcome::kLoss);
}

// Kalah

TEST(Kalah, PitThreeEarnsExtraTurn) {
  games::kalah::State s = games::kalah::initial_state();
  const auto sow = games::kalah::sow(s, 3);
  EXPECT_TRUE(sow.extra_turn);
  EXPECT_EQ(s.pits[6], 1);
  EXPECT_EQ((std::vector<int>(s.pits.begin(), s.pits.begin() + 6)), (std::vector<int>{4, 4, 0, 5, 5, 5}));
  EXPECT_EQ(s.to_move, 0);
}

TEST(Kalah, CaptureTakesOppositePit) {
  games::kalah::State s = games::kalah::initial_state();
  s.pits = {0, 1, 0, 0, 0, 0, 0, 4, 4, 4, 3, 4, 4, 24};
  ASSERT_EQ(games::kalah::total_seeds(s), 48);
  const auto sow = games::kalah::sow(s, 2);
  EXPECT_EQ(sow.captured, 4);
  EXPECT_EQ(s.pits[6], 4);
  EXPECT_EQ(s.pits[2], 0);
  EXPECT_EQ(s.pits[10], 0);
  EXPECT_EQ(games::kalah::opposite(s, 2), 10);
  EXPECT_EQ(games::kalah::total_seeds(s), 48);
}

TEST(Kalah, NoCaptureOppositeEmpty) {
  games::kalah::State s = games::kalah::initial_state();
  s.pits = {0, 1, 0, 0, 0, 0, 0, 4, 4, 4, 0, 4, 4, 27};
  const auto sow = games::kalah::sow(s, 2);
  EXPECT_EQ(sow.captured, 0);
  EXPECT_EQ(s.pits[2], 1);
}

TEST(Kalah, SweepEndsGame) {
  games::kalah::State s = games::kalah::initial_state();
  s.pits = {0, 0, 0, 0, 0, 1, 20, 2, 2, 2, 2, 2, 2, 15};
  const auto sow = games::kalah::sow(s, 6);
  EXPECT_TRUE(sow.swept);
  EXPECT_TRUE(s.over);
  EXPECT_EQ(s.pits[6], 21);
  EXPECT_EQ(s.pits[13], 27);
  EXPECT_EQ(games::kalah::total_seeds(s), 48);
  EXPECT_EQ(games::kalah::winner(s), 1);
}

TEST(Kalah, SowingSkipsOpponentStore) {
  games::kalah::State s = games::kalah::initial_state();
  s.pits = {0, 0, 0, 0, 0, 10, 0, 4, 4, 4, 4, 4, 4, 14};
  games::kalah::sow(s, 6);
  EXPECT_EQ(s.pits[13], 14);
  EXPECT_EQ(s.pits[0], 1);
  EXPECT_EQ(s.pits[1], 1);
  EXPECT_EQ(games::kalah::total_seeds(s), 48);
}

TEST(Kalah, EmptyPitIsIllegal) {
  games::kalah::State s = games::kalah::initial_state();
  games::kalah::sow(s, 3);
  EXPECT_EQ(code_of([&] { games::kalah::sow(s, 3); }), ErrorCode::kIllegalMove);
}

TEST(Kalah, SeedsConservedInPlayouts) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    engine::Match m = engine::create_match(games::builtin_registry(), "kalah", {"a", "b"}, seed);
    testing::random_playout(m, seed, 1000, [](const engine::Match& match, const engine::Events&) {
      const auto& s = games::kalah::Rules::state_of(match.state());
      ASSERT_EQ(games::kalah::total_seeds(s), 48);
    });
    EXPECT_EQ(m.status(), engine::Status::kFinished);
  }
}

TEST(Kalah, MiniatureVariant) {
  const games::kalah::Rules rules(2, 2);
  engine::Rng rng(1);
  const auto state = rules.initial_state(2, rng);
  EXPECT_EQ(rules.legal_moves(*state, 0), (std::vector<std::string>{"pit 1", "pit 2"}));
  EXPECT_EQ(games::kalah::total_seeds(games::kalah::Rules::state_of(*state)), 8);
}

// No Thanks!

TEST(NoThanks, ScoreExamples) {
  EXPECT_EQ(games::nothanks::score(std::vector<int>{}, 11), -11);
  EXPECT_EQ(games::nothanks::score(std::vector<int>{3}, 0), 3);
  EXPECT_EQ(games::nothanks::score(std::vector<int>{5, 6, 7, 10}, 3), 12);
  EXPECT_EQ(games::nothanks::score(std::vector<int>{33, 34, 35}, 0), 33);
}

TEST(NoThanks, StartingChips) {
  EXPECT_EQ(games::nothanks::starting_chips(3), 11);
  EXPECT_EQ(games::nothanks::starting_chips(5), 11);
  EXPECT_EQ(games::nothanks::starting_chips(6), 9);
  EXPECT_EQ(games::nothanks::starting_chips(7), 7);
}

TEST(NoThanks, PayWithoutChipsIsIllegal) {
  engine::Match m = engine::create_match(games::builtin_registry(), "nothanks", {"a", "b", "c"}, 6);
  auto s = games::nothanks::Rules::state_of(m.state());
  s.hands[0].chips = 0;
  EXPECT_EQ(code_of([&] { games::nothanks::pay(s); }), ErrorCode::kIllegalMove);
}

TEST(NoThanks, TakeCollectsPot) {
  engine::Match m = engine::create_match(games::builtin_registry(), "nothanks", {"a", "b", "c"}, 6);
  auto s = games::nothanks::Rules::state_of(m.state());
  s.face_up = 30;
  s.pot = 5;
  const int chips = s.hands[0].chips;
  games::nothanks::take(s);
  EXPECT_TRUE(std::binary_search(s.hands[0].cards.begin(), s.hands[0].cards.end(), 30));
  EXPECT_EQ(s.hands[0].chips, chips + 5);
  EXPECT_EQ(s.pot, 0);
  EXPECT_EQ(s.to_move, 0);
}

TEST(NoThanks, SetupAndConservation) {
  for (int seats = 3; seats <= 7; ++seats) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      engine::Match m = engine::create_match(games::builtin_registry(), "nothanks",
                                             std::vector<std::string>(static_cast<std::size_t>(seats), "p"), seed);
      const int chips = seats * games::nothanks::starting_chips(seats);
      const auto& s0 = games::nothanks::Rules::state_of(m.state());
      std::set<int> all(s0.deck.begin(), s0.deck.end());
      all.insert(*s0.face_up);
      EXPECT_EQ(all.size(), 24u);
      EXPECT_EQ(s0.removed.size(), 9u);
      testing::random_playout(m, seed, 10000, [&](const engine::Match& match, const engine::Events&) {
        const auto& s = games::nothanks::Rules::state_of(match.state());
        ASSERT_EQ(games::nothanks::total_chips(s), chips);
        std::multiset<int> cards(s.deck.begin(), s.deck.end());
        if (s.face_up) cards.insert(*s.face_up);
        for (const auto& h : s.hands) cards.insert(h.cards.begin(), h.cards.end());
        ASSERT_EQ(std::set<int>(cards.begin(), cards.end()), all);
        ASSERT_EQ(cards.size(), 24u);
      });
      EXPECT_EQ(m.status(), engine::Status::kFinished);
    }
  }
}

TEST(NoThanks, ViewHidesDeck) {
  engine::Match m = engine::create_match(games::builtin_registry(), "nothanks", {"a", "b", "c"}, 6);
  for (std::optional<int> viewer : {std::optional<int>{}, std::optional<int>{0}, std::optional<int>{2}}) {
    const Json view = m.observe(viewer).view;
    EXPECT_FALSE(testing::contains_key(view, "deck"));
    EXPECT_FALSE(testing::contains_key(view, "removed"));
    EXPECT_EQ(view.at("cards_remaining"), 23);
  }
}

// Othello

TEST(Othello, InitialPlacements) {
  const auto s = games::othello::initial_state();
  std::vector<std::string> names;
  for (int cell : games::othello::legal_placements(s.board, games::othello::Disc::kBlack)) {
    names.push_back(games::othello::cell_name(cell));
  }
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"c4", "d3", "e6", "f5"}));
  EXPECT_EQ(games::othello::count(s.board, games::othello::Disc::kBlack), 2);
}

TEST(Othello, D3FlipsD4) {
  const auto s = games::othello::initial_state();
  const auto flips = games::othello::resolve(s.board, *games::othello::parse_cell("d3"),
                                             games::othello::Disc::kBlack);
  ASSERT_EQ(flips.size(), 1u);
  EXPECT_EQ(games::othello::cell_name(flips[0]), "d4");
}

TEST(Othello, PassOnlyWhenStuck) {
  engine::Match m = engine::create_match(games::builtin_registry(), "othello", {"a", "b"}, 1);
  EXPECT_EQ(code_of([&] { m.submit(0, "pass"); }), ErrorCode::kIllegalMove);
  EXPECT_EQ(code_of([&] { m.submit(0, "d4"); }), ErrorCode::kIllegalMove);
  EXPECT_EQ(code_of([&] { m.submit(0, "i9"); }), ErrorCode::kBadToken);
}

std::vector<std::string> rows_of(const games::othello::Board& board) {
  std::vector<std::string> rows;
  for (int r = 0; r < 8; ++r) {
    std::string row;
    for (int c = 0; c < 8; ++c) {
      const auto d = board[static_cast<std::size_t>(r * 8 + c)];
      row.push_back(d == games::othello::Disc::kBlack ? 'B' : d == games::othello::Disc::kWhite ? 'W' : '.');
    }
    rows.push_back(row);
  }
  return rows;
}

TEST(Othello, PlayoutsAgreeWithDirectionScanOracle) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    engine::Match m = engine::create_match(games::builtin_registry(), "othello", {"a", "b"}, seed);
    int discs = 4;
    testing::random_playout(m, seed, 200, [&](const engine::Match& match, const engine::Events&) {
      const auto& s = games::othello::Rules::state_of(match.state());
      const int now = games::othello::count(s.board, games::othello::Disc::kBlack) +
                      games::othello::count(s.board, games::othello::Disc::kWhite);
      ASSERT_GE(now, discs);
      discs = now;
      if (!match.to_move()) return;
      const int seat = *match.to_move();
      auto expected = testing::oracle_othello_moves(rows_of(s.board), seat == 0 ? 'B' : 'W');
      if (expected.empty()) expected.push_back("pass");
      std::sort(expected.begin(), expected.end());
      ASSERT_EQ(match.legal_moves(seat), expected);
    });
  }
}

TEST(Othello, FlippedCellsHeldOpponentDiscs) {
  engine::Match m = engine::create_match(games::builtin_registry(), "othello", {"a", "b"}, 3);
  testing::PlayoutPolicy policy(3);
  while (m.to_move()) {
    const int seat = *m.to_move();
    const auto before = games::othello::Rules::state_of(m.state()).board;
    const std::string token = policy.choose(m, seat);
    m.submit(seat, token);
    if (token == "pass") continue;
    const int cell = *games::othello::parse_cell(token);
    const auto flips = games::othello::resolve(before, cell, games::othello::disc_of(seat));
    ASSERT_FALSE(flips.empty());
    for (int f : flips) ASSERT_EQ(before[static_cast<std::size_t>(f)], games::othello::opponent(games::othello::disc_of(seat)));
  }
}

// Black Box

games::blackbox::AtomSet atoms(std::initializer_list<std::string_view> cells) {
  std::vector<int> idx;
  for (auto c : cells) idx.push_back(*games::blackbox::parse_cell(c));
  return games::blackbox::atom_set(idx);
}

TEST(BlackBox, EmptyGridPortArithmetic) {
  const auto none = games::blackbox::atom_set(std::vector<int>{});
  using games::blackbox::RayKind;
  EXPECT_EQ(games::blackbox::trace(none, 1), (games::blackbox::RayOutcome{RayKind::kExit, 24}));
  EXPECT_EQ(games::blackbox::trace(none, 8), (games::blackbox::RayOutcome{RayKind::kExit, 17}));
  EXPECT_EQ(games::blackbox::trace(none, 9), (games::blackbox::RayOutcome{RayKind::kExit, 32}));
  EXPECT_EQ(games::blackbox::trace(none, 16), (games::blackbox::RayOutcome{RayKind::kExit, 25}));
  EXPECT_EQ(code_of([&] { games::blackbox::trace(none, 0); }), ErrorCode::kBadToken);
  EXPECT_EQ(code_of([&] { games::blackbox::trace(none, 33); }), ErrorCode::kBadToken);
}

TEST(BlackBox, HitDeflectReflect) {
  using games::blackbox::RayKind;
  EXPECT_EQ(games::blackbox::trace(atoms({"e1"}), 1).kind, RayKind::kHit);
  // Atom at d2 deflects the eastbound ray in row 1 northwards out of the top.
  EXPECT_EQ(games::blackbox::trace(atoms({"d2"}), 1), (games::blackbox::RayOutcome{RayKind::kExit, 30}));
  EXPECT_EQ(games::blackbox::trace(atoms({"a2"}), 1).kind, RayKind::kReflect);
  EXPECT_EQ(games::blackbox::trace(atoms({"c1", "c3"}), 2).kind, RayKind::kReflect);
}

TEST(BlackBox, TraceMatchesVectorOracle) {
  std::mt19937_64 gen(5);
  for (int board = 0; board < 2000; ++board) {
    engine::Rng rng(gen());
    const std::vector<int> cells = games::blackbox::draw_atoms(rng);
    const auto set = games::blackbox::atom_set(cells);
    for (int port = 1; port <= 32; ++port) {
      const auto out = games::blackbox::trace(set, port);
      const int expected = testing::oracle_trace(cells, port);
      const int got = out.kind == games::blackbox::RayKind::kHit       ? -1
                      : out.kind == games::blackbox::RayKind::kReflect ? 0
                                                                        : out.exit_port;
      ASSERT_EQ(got, expected) << "port " << port;
    }
  }
}

TEST(BlackBox, ScoreExamples) {
  using games::blackbox::RayKind;
  using games::blackbox::Shot;
  const std::vector<int> at = {1, 10, 20, 30};
  EXPECT_EQ(games::blackbox::score(std::vector<Shot>{}, at, at), 0);
  const std::vector<Shot> one_exit = {{1, {RayKind::kExit, 24}}};
  EXPECT_EQ(games::blackbox::score(one_exit, at, at), 2);
  const std::vector<Shot> mixed = {{1, {RayKind::kHit, 0}}, {2, {RayKind::kHit, 0}}, {3, {RayKind::kExit, 22}}};
  EXPECT_EQ(games::blackbox::score(mixed, std::vector<int>{1, 10, 20, 31}, at), 9);
  EXPECT_EQ(code_of([&] { games::blackbox::score(mixed, std::vector<int>{1, 10, 20}, at); }),
            ErrorCode::kIllegalMove);
  EXPECT_EQ(code_of([&] { games::blackbox::score(mixed, std::vector<int>{1, 1, 20, 30}, at); }),
            ErrorCode::kIllegalMove);
}

TEST(BlackBox, AtomsHiddenUntilGuess) {
  engine::Match m = engine::create_match(games::builtin_registry(), "blackbox", {"a", "b"}, 12);
  EXPECT_EQ(m.observe(0).move_patterns, (std::vector<std::string>{"guess CELL CELL CELL CELL"}));
  m.submit(0, "ray 5");
  for (std::optional<int> viewer : {std::optional<int>{}, std::optional<int>{0}, std::optional<int>{1}}) {
    EXPECT_FALSE(testing::contains_key(m.observe(viewer).view, "atoms"));
  }
  EXPECT_EQ(code_of([&] { m.submit(0, "guess a1 a2 a3"); }), ErrorCode::kIllegalMove);
  EXPECT_EQ(code_of([&] { m.submit(0, "guess a1 a1 a2 a3"); }), ErrorCode::kIllegalMove);
  EXPECT_EQ(code_of([&] { m.submit(0, "guess a1 a2 a3 z9"); }), ErrorCode::kBadToken);
  const auto events = m.submit(0, "guess a1 a2 a3 a4");
  EXPECT_TRUE(has_event(events, "reveal"));
  EXPECT_TRUE(m.observe(1).view.at("rounds")[0].contains("atoms"));
  EXPECT_FALSE(m.observe(1).view.at("rounds")[1].contains("atoms"));
  EXPECT_EQ(m.to_move(), 1);
}

// Push Fight

games::pushfight::State board_from(const std::vector<std::string>& rows) {
  games::pushfight::State s;
  s.phase = games::pushfight::Phase::kPlay;
  for (int r = 0; r < games::pushfight::kRows; ++r) {
    for (int c = 0; c < games::pushfight::kCols; ++c) {
      const char g = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (!std::isalpha(static_cast<unsigned char>(g))) continue;
      s.board[static_cast<std::size_t>(r * 8 + c)] = games::pushfight::Piece{
          std::isupper(static_cast<unsigned char>(g)) ? 0 : 1,
          std::tolower(static_cast<unsigned char>(g)) == 's' ? games::pushfight::Shape::kSquare
                                                              : games::pushfight::Shape::kRound};
    }
  }
  return s;
}

int pf(std::string_view name) { return *games::pushfight::parse_cell(name); }

TEST(PushFight, LonePieceReachesWholeBoard) {
  const auto s = board_from({"  S...  ", " .......", ".......", "  ....  "});
  EXPECT_EQ(games::pushfight::slide_targets(s, pf("c1")).size(), 21u);
}

TEST(PushFight, BoxedPieceHasNoTargets) {
  std::vector<std::string> rows = {"  s...  ", " sSs....", "..s.... ", "  ....  "};
  const auto s = board_from(rows);
  EXPECT_TRUE(games::pushfight::slide_targets(s, pf("c2")).empty());
  EXPECT_EQ(code_of([&] { games::pushfight::slide_targets(s, pf("b2")); }), ErrorCode::kIllegalMove);
}

TEST(PushFight, SlideTargetsMatchBfsOracle) {
  const std::vector<std::string> rows = {"  .sR.  ", " .S.r.s.", "S..R.s. ", "  s.S.  "};
  const auto s = board_from(rows);
  for (int cell = 0; cell < 32; ++cell) {
    if (!s.board[static_cast<std::size_t>(cell)]) continue;
    if (s.board[static_cast<std::size_t>(cell)]->owner != 0) continue;
    std::vector<std::string> free_rows(4, std::string(8, '#'));
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 8; ++c) {
        if (games::pushfight::on_board(r, c) && !s.board[static_cast<std::size_t>(r * 8 + c)]) {
          free_rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = '.';
        }
      }
    }
    EXPECT_EQ(games::pushfight::slide_targets(s, cell), testing::oracle_flood(free_rows, cell / 8, cell % 8))
        << games::pushfight::cell_name(cell);
  }
}

TEST(PushFight, AnchoredLineCannotBePushed) {
  auto s = board_from({"  ....  ", " .Ss....", ".......", "  ....  "});
  s.anchor = pf("d2");
  EXPECT_FALSE(games::pushfight::check_push(s, pf("c2"), games::pushfight::Direction::kRight).legal);
  EXPECT_EQ(code_of([&] { games::pushfight::push(s, pf("c2"), games::pushfight::Direction::kRight); }),
            ErrorCode::kIllegalMove);
}

TEST(PushFight, PushOffOpenEdgeWins) {
  const games::pushfight::Rules rules;
  engine::StateOf<games::pushfight::State> s(board_from({"  ....  ", " .....Sr", ".......", "  ....  "}));
  s.value.moves_left = 0;
  engine::Rng rng(1);
  const auto events = rules.apply(s, 0, "push g2 right", rng);
  EXPECT_TRUE(has_event(events, "fell_off"));
  ASSERT_TRUE(rules.terminal(s));
  EXPECT_EQ((*rules.terminal(s))[0].outcome, engine::Outcome::kWin);
}

TEST(PushFight, RailBlocksPush) {
  auto s = board_from({"  .s..  ", " ..S....", ".......", "  ....  "});
  EXPECT_FALSE(games::pushfight::check_push(s, pf("d2"), games::pushfight::Direction::kUp).legal);
}

TEST(PushFight, RoundsCannotPush) {
  auto s = board_from({"  ....  ", " .Rs....", ".......", "  ....  "});
  EXPECT_FALSE(games::pushfight::check_push(s, pf("c2"), games::pushfight::Direction::kRight).legal);
}

TEST(PushFight, JammedMoverLoses) {
  const games::pushfight::Rules rules;
  engine::StateOf<games::pushfight::State> s(board_from({"  R...  ", " .......", "s......", "  ....  "}));
  engine::Rng rng(1);
  EXPECT_EQ(rules.legal_moves(s, 0).back(), "skip");
  rules.apply(s, 0, "skip", rng);
  ASSERT_TRUE(rules.terminal(s));
  EXPECT_EQ((*rules.terminal(s))[0].outcome, engine::Outcome::kLoss);
}

TEST(PushFight, PushMovesAnchorToPusher) {
  auto s = board_from({"  ....  ", " .Ss....", ".......", "  ....  "});
  const auto out = games::pushfight::push(s, pf("c2"), games::pushfight::Direction::kRight);
  EXPECT_EQ(out.moved, (std::vector<int>{pf("c2"), pf("d2")}));
  EXPECT_EQ(s.anchor, pf("d2"));
  EXPECT_TRUE(s.board[static_cast<std::size_t>(pf("e2"))]);
  EXPECT_FALSE(s.board[static_cast<std::size_t>(pf("c2"))]);
}

TEST(PushFight, PlacementStaysInOwnHalf) {
  engine::Match m = engine::create_match(games::builtin_registry(), "pushfight", {"a", "b"}, 1);
  EXPECT_EQ(code_of([&] { m.submit(0, "place s e2"); }), ErrorCode::kIllegalMove);
  for (const std::string& t : m.legal_moves(0)) {
    const int cell = pf(std::string_view(t).substr(8));
    EXPECT_LT(cell % 8, 4) << t;
  }
}

TEST(PushFight, PiecesNeverExceedLimits) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    engine::Match m = engine::create_match(games::builtin_registry(), "pushfight", {"a", "b"}, seed);
    testing::random_playout(m, seed, 400, [](const engine::Match& match, const engine::Events&) {
      const auto& s = games::pushfight::Rules::state_of(match.state());
      for (int seat = 0; seat < 2; ++seat) {
        ASSERT_LE(games::pushfight::piece_count(s, seat, games::pushfight::Shape::kSquare), 3);
        ASSERT_LE(games::pushfight::piece_count(s, seat, games::pushfight::Shape::kRound), 2);
      }
      if (s.phase == games::pushfight::Phase::kPlacement) ASSERT_FALSE(s.anchor);
      if (s.anchor) {
        const auto& p = s.board[static_cast<std::size_t>(*s.anchor)];
        ASSERT_TRUE(p && p->shape == games::pushfight::Shape::kSquare);
      }
    });
  }
}

// Every game

TEST(AllGames, RestoreRoundTripsPublicViews) {
  for (const std::string game : {"pig", "kalah", "othello", "pushfight"}) {
    engine::Match m = engine::create_match(games::builtin_registry(), game, {"a", "b"}, 9);
    testing::random_playout(m, 9, 200, [&](const engine::Match& match, const engine::Events&) {
      const auto restored = match.rules().restore(match.observe(std::nullopt).view);
      ASSERT_TRUE(restored) << game;
      ASSERT_TRUE(restored->equals(match.state())) << game;
    });
  }
}

TEST(AllGames, LegalMovesSortedAndAccepted) {
  for (const std::string& game : testing::all_games()) {
    for (int seats : testing::seat_options(game)) {
      engine::Match m = engine::create_match(games::builtin_registry(), game,
                                             std::vector<std::string>(static_cast<std::size_t>(seats), "p"), 3);
      testing::random_playout(m, 3, 300, [&](const engine::Match& match, const engine::Events&) {
        if (!match.to_move()) return;
        const auto legal = match.legal_moves(*match.to_move());
        ASSERT_TRUE(std::is_sorted(legal.begin(), legal.end())) << game;
        ASSERT_TRUE(!legal.empty() || !match.observe(*match.to_move()).move_patterns.empty()) << game;
        for (const std::string& t : legal) {
          ASSERT_TRUE(testing::oracle_well_formed(game, t)) << game << ": " << t;
          engine::Match copy = match;
          ASSERT_NO_THROW(copy.submit(*match.to_move(), t)) << game << ": " << t;
        }
      });
    }
  }
}

}  // namespace
}  // namespace boardforge
