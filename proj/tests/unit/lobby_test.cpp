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

#include <gtest/gtest.h>

#include "boardforge/games/builtin.hpp"
#include "boardforge/net/lobby.hpp"
#include "boardforge/net/protocol.hpp"
#include "oracles.hpp"

namespace boardforge {
namespace {

using net::Json;
using net::Outbox;

std::vector<Json> to(const Outbox& out, net::ConnId conn) {
  std::vector<Json> messages;
  for (const auto& o : out) {
    if (o.to == conn) messages.push_back(o.message);
  }
  return messages;
}

std::vector<std::string> types(const std::vector<Json>& messages) {
  std::vector<std::string> out;
  for (const Json& m : messages) out.push_back(m.at("type"));
  return out;
}

class LobbyTest : public ::testing::Test {
 protected:
  LobbyTest() : lobby(games::builtin_registry(), 1) {}

  void hello(net::ConnId conn, const std::string& name) {
    const Outbox out = lobby.handle(conn, {{"type", "hello"}, {"name", name}, {"proto", 1}});
    ASSERT_EQ(out.size(), 1u);
    ASSERT_EQ(out[0].message.at("type"), "welcome");
  }

  std::string create(net::ConnId conn, const std::string& game, const Json& seats, std::uint64_t seed = 5) {
    const Outbox out = lobby.handle(conn, {{"type", "create"}, {"game", game}, {"seats", seats}, {"seed", seed}});
    return out.at(0).message.at("match");
  }

  net::Lobby lobby;
};

TEST_F(LobbyTest, Handshake) {
  const Outbox out = lobby.handle(1, {{"type", "hello"}, {"name", "ada"}, {"proto", 1}});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].message, (Json{{"type", "welcome"}, {"session", "s1"}, {"proto", 1}}));
  EXPECT_FALSE(out[0].close);
  const Outbox again = lobby.handle(1, {{"type", "hello"}, {"name", "ada"}, {"proto", 1}});
  EXPECT_EQ(again[0].message.at("code"), "protocol");
}

TEST_F(LobbyTest, ProtocolMismatchCloses) {
  const Outbox out = lobby.handle(1, {{"type", "hello"}, {"name", "ada"}, {"proto", 2}});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].message.at("code"), "protocol");
  EXPECT_TRUE(out[0].close);
}

TEST_F(LobbyTest, RequestsBeforeHello) {
  const Outbox out = lobby.handle(1, {{"type", "list_games"}});
  EXPECT_EQ(out[0].message.at("code"), "protocol");
  EXPECT_FALSE(out[0].close);
}

TEST_F(LobbyTest, MalformedRequests) {
  hello(1, "ada");
  EXPECT_EQ(lobby.handle_text(1, "{not json")[0].message.at("code"), "bad_request");
  EXPECT_EQ(lobby.handle_text(1, "[1]")[0].message.at("code"), "bad_request");
  EXPECT_EQ(lobby.handle(1, {{"type", "dance"}})[0].message.at("code"), "bad_request");
  EXPECT_EQ(lobby.handle(1, {{"type", "create"}, {"game", "chess"}, {"seats", {"a", "b"}}})[0].message.at("code"),
            "unknown_game");
  EXPECT_EQ(lobby.handle(1, {{"type", "create"}, {"game", "pig"}, {"seats", {"a"}}})[0].message.at("code"),
            "bad_request");
  EXPECT_EQ(lobby.handle(1, {{"type", "create"}, {"game", "pig"}, {"seats", {"a", "knuth"}}})[0].message.at("code"),
            "bad_request");
  EXPECT_EQ(lobby.handle(1, {{"type", "join"}, {"match", "m9"}, {"name", "ada"}})[0].message.at("code"),
            "unknown_match");
  EXPECT_EQ(lobby.handle(1, {{"type", "move"}, {"match", "m9"}, {"token", "roll"}})[0].message.at("code"),
            "unknown_match");
}

TEST_F(LobbyTest, CreateSeatsCreatorByName) {
  hello(1, "ada");
  const Outbox out = lobby.handle(1, {{"type", "create"}, {"game", "othello"}, {"seats", {"ada", "bob"}}, {"seed", "77"}});
  const auto mine = to(out, 1);
  EXPECT_EQ(types(mine), (std::vector<std::string>{"created", "joined", "state"}));
  EXPECT_EQ(mine[0].at("match"), "m1");
  EXPECT_EQ(mine[0].at("seed"), "77");
  EXPECT_EQ(mine[1].at("seat"), 0);
  EXPECT_EQ(mine[2].at("observation").at("viewer"), 0);
  EXPECT_EQ(lobby.match("m1")->seed(), 77u);
}

TEST_F(LobbyTest, IllegalMoveGoesToSenderOnly) {
  hello(1, "ada");
  hello(2, "bob");
  const std::string id = create(1, "othello", {"ada", "bob"});
  lobby.handle(2, {{"type", "join"}, {"match", id}, {"name", "bob"}});
  const Outbox out = lobby.handle(1, {{"type", "move"}, {"match", id}, {"token", "a1"}});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].to, 1u);
  EXPECT_EQ(out[0].message.at("code"), "illegal_move");
  EXPECT_EQ(lobby.handle(1, {{"type", "move"}, {"match", id}, {"token", "zz"}})[0].message.at("code"),
            "illegal_move");
  EXPECT_EQ(lobby.handle(2, {{"type", "move"}, {"match", id}, {"token", "d3"}})[0].message.at("code"),
            "not_your_turn");
  EXPECT_TRUE(lobby.match(id)->history().empty());
}

TEST_F(LobbyTest, AcceptedMoveReachesEveryParticipant) {
  hello(1, "ada");
  hello(2, "bob");
  hello(3, "cy");
  const std::string id = create(1, "othello", {"ada", "bob"});
  lobby.handle(2, {{"type", "join"}, {"match", id}, {"name", "bob"}});
  const Outbox spectate = lobby.handle(3, {{"type", "join"}, {"match", id}, {"name", "cy"}});
  EXPECT_TRUE(to(spectate, 3)[0].at("seat").is_null());
  const Outbox out = lobby.handle(1, {{"type", "move"}, {"match", id}, {"token", "D3"}});
  for (net::ConnId c : {1, 2, 3}) {
    EXPECT_EQ(types(to(out, c)), (std::vector<std::string>{"event", "event", "event", "state"})) << c;
  }
  EXPECT_EQ(to(out, 2)[3].at("observation").at("legal_moves").size(), 3u);
  EXPECT_TRUE(to(out, 3)[3].at("observation").at("legal_moves").empty());
  EXPECT_EQ(to(out, 1)[3].at("observation").at("view"), to(out, 2)[3].at("observation").at("view"));
  EXPECT_EQ(lobby.match(id)->history(), std::vector<std::string>{"d3"});
}

TEST_F(LobbyTest, SeatRules) {
  hello(1, "ada");
  hello(2, "bob");
  hello(3, "eve");
  const std::string id = create(1, "pig", {"ada", "*"});
  EXPECT_EQ(lobby.handle(3, {{"type", "join"}, {"match", id}, {"name", "eve"}, {"seat", 0}})[0].message.at("code"),
            "seat_taken");
  EXPECT_EQ(lobby.handle(3, {{"type", "join"}, {"match", id}, {"name", "eve"}, {"seat", 5}})[0].message.at("code"),
            "bad_request");
  const Outbox out = lobby.handle(3, {{"type", "join"}, {"match", id}, {"name", "eve"}});
  EXPECT_EQ(to(out, 3)[0].at("seat"), 1);
  EXPECT_EQ(to(out, 1)[0].at("kind"), "seat_joined");
  const Outbox late = lobby.handle(2, {{"type", "join"}, {"match", id}, {"name", "bob"}});
  EXPECT_TRUE(to(late, 2)[0].at("seat").is_null());
}

TEST_F(LobbyTest, AgentsMoveAfterHumans) {
  hello(1, "ada");
  const std::string id = create(1, "othello", {"ada", "greedy"});
  lobby.handle(1, {{"type", "move"}, {"match", id}, {"token", "d3"}});
  EXPECT_EQ(lobby.match(id)->history().size(), 2u);
  EXPECT_EQ(lobby.match(id)->to_move(), 0);
}

TEST_F(LobbyTest, AgentOnlyMatchPlaysOut) {
  hello(1, "ada");
  const Outbox out = lobby.handle(1, {{"type", "create"}, {"game", "kalah"}, {"seats", {"greedy", "ab:2"}}, {"seed", 3}});
  const auto mine = to(out, 1);
  EXPECT_EQ(mine.back().at("type"), "finished") << mine.back().dump();
  EXPECT_EQ(lobby.match("m1")->status(), engine::Status::kFinished);
  EXPECT_EQ(lobby.handle(1, {{"type", "move"}, {"match", "m1"}, {"token", "pit 1"}})[0].message.at("code"),
            "match_finished");
}

TEST_F(LobbyTest, DisconnectVacatesAndRejoinWorks) {
  hello(1, "ada");
  hello(2, "bob");
  const std::string id = create(1, "pig", {"ada", "bob"});
  lobby.handle(2, {{"type", "join"}, {"match", id}, {"name", "bob"}});
  const Outbox out = lobby.disconnect(2);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].to, 1u);
  EXPECT_EQ(out[0].message.at("kind"), "seat_vacated");
  EXPECT_EQ(out[0].message.at("detail").at("seat"), 1);
  hello(4, "bob");
  const Outbox back = lobby.handle(4, {{"type", "join"}, {"match", id}, {"name", "bob"}, {"seat", 1}});
  EXPECT_EQ(to(back, 4)[0].at("seat"), 1);
}

TEST_F(LobbyTest, LeaveReleasesSeat) {
  hello(1, "ada");
  hello(2, "bob");
  const std::string id = create(1, "pig", {"ada", "bob"});
  lobby.handle(2, {{"type", "join"}, {"match", id}, {"name", "bob"}});
  const Outbox out = lobby.handle(2, {{"type", "leave"}, {"match", id}});
  EXPECT_EQ(to(out, 2)[0].at("kind"), "left");
  EXPECT_EQ(to(out, 1)[0].at("kind"), "seat_vacated");
  const Outbox list = lobby.handle(1, {{"type", "list_matches"}});
  EXPECT_EQ(list[0].message.at("matches")[0].at("seats")[1].at("occupied"), false);
}

TEST_F(LobbyTest, ListGamesCarriesCatalogue) {
  hello(1, "ada");
  const Json games = lobby.handle(1, {{"type", "list_games"}})[0].message.at("games");
  ASSERT_EQ(games.size(), 7u);
  for (const Json& g : games) {
    ASSERT_TRUE(g.contains("catalog")) << g.at("id");
    EXPECT_FALSE(g.at("catalog").at("topics").empty());
  }
  EXPECT_EQ(games[0].at("id"), "blackbox");
  EXPECT_TRUE(games[0].at("agents").empty());
}

TEST_F(LobbyTest, MatchIdsAreNeverReused) {
  hello(1, "ada");
  EXPECT_EQ(create(1, "pig", {"ada", "bob"}), "m1");
  EXPECT_EQ(create(1, "pig", {"ada", "bob"}), "m2");
  EXPECT_EQ(lobby.match_ids(), (std::vector<std::string>{"m1", "m2"}));
}

TEST_F(LobbyTest, FuzzedMessagesKeepReplayValid) {
  hello(1, "ada");
  hello(2, "bob");
  std::mt19937_64 gen(8);
  for (const std::string& game : testing::all_games()) {
    const int seats = testing::seat_options(game).back();
    Json names = Json::array();
    for (int s = 0; s < seats; ++s) names.push_back(s % 2 == 0 ? "ada" : "bob");
    const std::string id = create(1, game, names);
    lobby.handle(2, {{"type", "join"}, {"match", id}, {"name", "bob"}});
    for (int i = 0; i < 400; ++i) {
      const engine::Match* m = lobby.match(id);
      std::string token;
      if (m->to_move() && gen() % 2 == 0) {
        testing::PlayoutPolicy policy(gen());
        token = policy.choose(*m, *m->to_move());
      } else {
        token = testing::adversarial_token(gen, game);
      }
      const net::ConnId from = gen() % 2 == 0 ? 1 : 2;
      const Outbox out = lobby.handle(from, {{"type", "move"}, {"match", id}, {"token", token}});
      ASSERT_FALSE(to(out, from).empty());
    }
    const engine::Match* m = lobby.match(id);
    EXPECT_EQ(engine::load(games::builtin_registry(), engine::save(*m)), *m) << game;
  }
}

}  // namespace
}  // namespace boardforge
