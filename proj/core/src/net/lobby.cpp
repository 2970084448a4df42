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

#include "boardforge/net/lobby.hpp"

#include <algorithm>
#include <charconv>

#include "boardforge/catalog/catalog.hpp"

namespace boardforge::net {
namespace {

struct Reject {
  std::string_view code;
  std::string message;
};

[[noreturn]] void reject(std::string_view code, std::string message) {
  throw Reject{code, std::move(message)};
}

const std::string& string_field(const Json& message, const char* key) {
  const auto it = message.find(key);
  if (it == message.end() || !it->is_string()) {
    reject(codes::kBadRequest, std::string("'") + key + "' must be a string");
  }
  return it->get_ref<const std::string&>();
}

std::optional<std::uint64_t> seed_field(const Json& message) {
  const auto it = message.find("seed");
  if (it == message.end() || it->is_null()) return std::nullopt;
  if (it->is_number_unsigned()) return it->get<std::uint64_t>();
  if (it->is_number_integer() && it->get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(it->get<std::int64_t>());
  }
  if (it->is_string()) {
    const auto& text = it->get_ref<const std::string&>();
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && end == text.data() + text.size() && !text.empty()) return value;
  }
  reject(codes::kBadRequest, "'seed' must be a non-negative integer or decimal string");
}

std::uint64_t agent_seed(std::uint64_t match_seed, int seat) {
  return match_seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(seat + 1));
}

Json reply(std::string_view type, Json fields = Json::object()) {
  fields["type"] = type;
  return fields;
}

}  // namespace

Lobby::Lobby(const engine::Registry& registry, std::uint64_t seed)
    : registry_(registry), seeds_(seed) {}

void Lobby::connect(ConnId conn) {
  sessions_.try_emplace(conn, Session{std::nullopt, "s" + std::to_string(conn)});
}

Outbox Lobby::handle_text(ConnId conn, std::string_view text) {
  Json message = Json::parse(text, nullptr, false);
  if (message.is_discarded()) {
    connect(conn);
    return {{conn, error_message(codes::kBadRequest, "malformed JSON")}};
  }
  return handle(conn, message);
}

Outbox Lobby::handle(ConnId conn, const Json& message) {
  connect(conn);
  try {
    if (!message.is_object()) reject(codes::kBadRequest, "message must be a JSON object");
    const std::string& type = string_field(message, "type");
    if (type == "hello") return on_hello(conn, message);
    if (!sessions_.at(conn).name) reject(codes::kProtocol, "send hello first");
    if (type == "create") return on_create(conn, message);
    if (type == "join") return on_join(conn, message);
    if (type == "move") return on_move(conn, message);
    if (type == "leave") return on_leave(conn, message);
    if (type == "list_games") return on_list_games(conn);
    if (type == "list_matches") return on_list_matches(conn);
    reject(codes::kBadRequest, "unknown message type '" + type + "'");
  } catch (const Reject& r) {
    return {{conn, error_message(r.code, r.message)}};
  } catch (const engine::Error& e) {
    return {{conn, error_message(wire_code(e.code()), e.what())}};
  } catch (const Json::exception& e) {
    return {{conn, error_message(codes::kBadRequest, e.what())}};
  } catch (const std::exception& e) {
    return {{conn, error_message(codes::kBadRequest, std::string("internal error: ") + e.what())}};
  }
}

Outbox Lobby::disconnect(ConnId conn) {
  Outbox out;
  for (auto& [id, room] : rooms_) release(out, conn, id, room);
  sessions_.erase(conn);
  return out;
}

const engine::Match* Lobby::match(std::string_view id) const {
  const auto it = rooms_.find(id);
  return it == rooms_.end() ? nullptr : &it->second.match;
}

std::vector<std::string> Lobby::match_ids() const {
  std::vector<std::string> ids;
  for (const auto& [id, room] : rooms_) ids.push_back(id);
  return ids;
}

Outbox Lobby::on_hello(ConnId conn, const Json& message) {
  const auto proto = message.find("proto");
  if (proto == message.end() || !proto->is_number_integer() ||
      proto->get<int>() != kProtocolVersion) {
    return {{conn,
             error_message(codes::kProtocol,
                           "unsupported protocol; expected proto " + std::to_string(kProtocolVersion)),
             true}};
  }
  Session& session = sessions_.at(conn);
  if (session.name) reject(codes::kProtocol, "hello already received");
  const std::string& name = string_field(message, "name");
  if (name.empty()) reject(codes::kBadRequest, "'name' must not be empty");
  session.name = name;
  return {{conn, reply("welcome", {{"session", session.id}, {"proto", kProtocolVersion}})}};
}

Outbox Lobby::on_create(ConnId conn, const Json& message) {
  const auto rules = registry_.get(string_field(message, "game"));
  const auto seats_it = message.find("seats");
  if (seats_it == message.end() || !seats_it->is_array()) {
    reject(codes::kBadRequest, "'seats' must be an array");
  }
  const std::optional<std::uint64_t> requested = seed_field(message);
  const std::uint64_t seed = requested ? *requested : seeds_.next();

  std::vector<std::string> names;
  std::vector<Seat> seats;
  for (const Json& entry : *seats_it) {
    if (!entry.is_string() || entry.get_ref<const std::string&>().empty()) {
      reject(codes::kBadRequest, "each seat must be a non-empty name or agent spec");
    }
    const std::string& text = entry.get_ref<const std::string&>();
    Seat seat;
    if (const auto spec = ai::parse_agent_spec(text)) {
      seat.agent.emplace(*spec, rules, agent_seed(seed, static_cast<int>(seats.size())));
    }
    names.push_back(text);
    seats.push_back(std::move(seat));
  }

  const std::string id = "m" + std::to_string(next_match_++);
  Room& room = rooms_.emplace(id, Room{engine::Match(rules, names, seed), std::move(seats), {}})
                   .first->second;

  Outbox out;
  out.push_back({conn, reply("created", {{"match", id},
                                         {"game", rules->id()},
                                         {"seed", std::to_string(seed)}})});
  const std::string& creator = *sessions_.at(conn).name;
  for (std::size_t i = 0; i < room.seats.size(); ++i) {
    if (!room.seats[i].agent && names[i] == creator) {
      room.seats[i].holder = conn;
      out.push_back({conn, reply("joined", {{"match", id}, {"seat", i}})});
    }
  }
  if (!viewer_for(room, conn)) room.spectators.insert(conn);
  send_state(out, id, room, conn);
  drive_agents(out, id, room);
  return out;
}

Outbox Lobby::on_join(ConnId conn, const Json& message) {
  const std::string& id = string_field(message, "match");
  Room& r = room(message);
  const std::string& name = string_field(message, "name");

  auto available = [&](std::size_t i) {
    const Seat& seat = r.seats[i];
    const std::string& reserved = r.match.seat_names()[i];
    return !seat.agent && !seat.holder && (reserved == "*" || reserved == name);
  };

  std::optional<std::size_t> chosen;
  const auto seat_it = message.find("seat");
  if (seat_it != message.end() && !seat_it->is_null()) {
    if (!seat_it->is_number_integer()) reject(codes::kBadRequest, "'seat' must be an integer");
    const auto seat = seat_it->get<long long>();
    if (seat < 0 || seat >= static_cast<long long>(r.seats.size())) {
      reject(codes::kBadRequest, "no seat " + std::to_string(seat));
    }
    if (!available(static_cast<std::size_t>(seat))) {
      reject(codes::kSeatTaken, "seat " + std::to_string(seat) + " is not available");
    }
    chosen = static_cast<std::size_t>(seat);
  } else {
    for (std::size_t i = 0; i < r.seats.size() && !chosen; ++i) {
      if (available(i)) chosen = i;
    }
  }

  Outbox out;
  if (!chosen) {
    r.spectators.insert(conn);
    out.push_back({conn, reply("joined", {{"match", id}, {"seat", nullptr}})});
    send_state(out, id, r, conn);
    return out;
  }
  const std::set<ConnId> others = participants(r);
  r.seats[*chosen].holder = conn;
  r.spectators.erase(conn);
  out.push_back({conn, reply("joined", {{"match", id}, {"seat", *chosen}})});
  const engine::Event joined{"seat_joined", {{"seat", *chosen}, {"name", name}}};
  for (ConnId other : others) {
    if (other != conn) out.push_back({other, event_message(id, joined)});
  }
  send_state(out, id, r, conn);
  return out;
}

Outbox Lobby::on_move(ConnId conn, const Json& message) {
  const std::string& id = string_field(message, "match");
  Room& r = room(message);
  const std::string& token = string_field(message, "token");
  if (r.match.status() == engine::Status::kFinished) {
    reject(codes::kMatchFinished, "match " + id + " is finished");
  }
  const int seat = *r.match.to_move();
  if (r.seats[static_cast<std::size_t>(seat)].holder != conn) {
    reject(codes::kNotYourTurn, "seat " + std::to_string(seat) + " is to move");
  }
  const engine::Events events = r.match.submit(seat, token);
  Outbox out;
  publish(out, id, r, events);
  drive_agents(out, id, r);
  return out;
}

Outbox Lobby::on_leave(ConnId conn, const Json& message) {
  const std::string& id = string_field(message, "match");
  Room& r = room(message);
  if (!participants(r).contains(conn)) reject(codes::kBadRequest, "not in match " + id);
  Outbox out;
  release(out, conn, id, r);
  out.push_back({conn, reply("event", {{"match", id}, {"kind", "left"}, {"detail", Json::object()}})});
  return out;
}

Outbox Lobby::on_list_games(ConnId conn) const {
  Json games = Json::array();
  for (const std::string& game_id : registry_.ids()) {
    const auto rules = registry_.get(game_id);
    Json game = {{"id", game_id},
                 {"name", rules->display_name()},
                 {"min_seats", rules->min_seats()},
                 {"max_seats", rules->max_seats()}};
    Json agents = Json::array();
    for (const char* spec : {"random", "greedy", "ab:3", "pig-optimal", "hold:20", "knuth"}) {
      if (ai::supports(*ai::parse_agent_spec(spec), game_id)) agents.push_back(spec);
    }
    game["agents"] = agents;
    if (const auto* entry = catalog::find(catalog::load_catalog(), rules->display_name())) {
      Json topics = Json::array();
      for (catalog::Topic t : entry->topics) topics.push_back(catalog::to_string(t));
      game["catalog"] = {{"category", catalog::to_string(entry->category)},
                         {"topics", topics},
                         {"gui_value", catalog::to_string(entry->gui_value)},
                         {"players", entry->players.to_string()},
                         {"bgg_rating", entry->bgg_rating},
                         {"bgg_url", entry->bgg_url()}};
    }
    games.push_back(std::move(game));
  }
  return {{conn, reply("games", {{"games", games}})}};
}

Outbox Lobby::on_list_matches(ConnId conn) const {
  Json matches = Json::array();
  for (const auto& [id, r] : rooms_) {
    Json seats = Json::array();
    for (std::size_t i = 0; i < r.seats.size(); ++i) {
      seats.push_back({{"name", r.match.seat_names()[i]},
                       {"agent", r.seats[i].agent.has_value()},
                       {"occupied", r.seats[i].agent.has_value() || r.seats[i].holder.has_value()}});
    }
    matches.push_back({{"match", id},
                       {"game", r.match.game_id()},
                       {"status", engine::to_string(r.match.status())},
                       {"seats", seats}});
  }
  return {{conn, reply("matches", {{"matches", matches}})}};
}

Lobby::Room& Lobby::room(const Json& message) {
  const std::string& id = string_field(message, "match");
  const auto it = rooms_.find(id);
  if (it == rooms_.end()) reject(codes::kUnknownMatch, "no match '" + id + "'");
  return it->second;
}

std::set<ConnId> Lobby::participants(const Room& r) const {
  std::set<ConnId> out = r.spectators;
  for (const Seat& seat : r.seats) {
    if (seat.holder) out.insert(*seat.holder);
  }
  return out;
}

std::optional<int> Lobby::viewer_for(const Room& r, ConnId conn) const {
  const std::optional<int> mover = r.match.to_move();
  if (mover && r.seats[static_cast<std::size_t>(*mover)].holder == conn) return mover;
  for (std::size_t i = 0; i < r.seats.size(); ++i) {
    if (r.seats[i].holder == conn) return static_cast<int>(i);
  }
  return std::nullopt;
}

void Lobby::send_state(Outbox& out, const std::string& id, const Room& r, ConnId conn) const {
  out.push_back({conn, state_message(id, r.match.observe(viewer_for(r, conn)))});
}

void Lobby::publish(Outbox& out, const std::string& id, const Room& r,
                    const engine::Events& events) const {
  for (ConnId conn : participants(r)) {
    for (const engine::Event& event : events) out.push_back({conn, event_message(id, event)});
    send_state(out, id, r, conn);
    if (r.match.result()) out.push_back({conn, finished_message(id, *r.match.result())});
  }
}

void Lobby::drive_agents(Outbox& out, const std::string& id, Room& r) {
  while (const std::optional<int> mover = r.match.to_move()) {
    auto& agent = r.seats[static_cast<std::size_t>(*mover)].agent;
    if (!agent) break;
    const std::string token = agent->choose(r.match.observe(*mover));
    publish(out, id, r, r.match.submit(*mover, token));
  }
}

void Lobby::release(Outbox& out, ConnId conn, const std::string& id, Room& r) {
  std::vector<engine::Event> vacated;
  for (std::size_t i = 0; i < r.seats.size(); ++i) {
    if (r.seats[i].holder != conn) continue;
    r.seats[i].holder.reset();
    vacated.push_back({"seat_vacated", {{"seat", i}, {"name", r.match.seat_names()[i]}}});
  }
  r.spectators.erase(conn);
  for (ConnId other : participants(r)) {
    for (const engine::Event& event : vacated) out.push_back({other, event_message(id, event)});
  }
}

}  // namespace boardforge::net
