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

#include "cli.hpp"

#include <termios.h>
#include <unistd.h>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "boardforge/ai/agent.hpp"
#include "boardforge/catalog/catalog.hpp"
#include "boardforge/engine/token.hpp"
#include "boardforge/games/builtin.hpp"
#include "boardforge/net/client.hpp"
#include "boardforge/net/server.hpp"

namespace boardforge::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RuntimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_seed(const std::string& text, const std::string& what) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError(what + " must be a non-negative integer, got '" + text + "'");
  }
  return value;
}

// BOARDFORGE_SEED wins over --seed; otherwise a random seed.
std::uint64_t choose_seed(const std::string& flag) {
  if (const char* env = std::getenv("BOARDFORGE_SEED"); env && *env) {
    return parse_seed(env, "BOARDFORGE_SEED");
  }
  if (!flag.empty()) return parse_seed(flag, "--seed");
  std::random_device device;
  return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

std::uint64_t agent_seed(std::uint64_t match_seed, int seat) {
  return match_seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(seat + 1));
}

// "SEAT=SPEC" pairs, validated against the game and seat count.
std::map<int, std::string> parse_agent_bindings(const std::vector<std::string>& bindings,
                                                const engine::GameRules& rules, int seats) {
  std::map<int, std::string> out;
  for (const std::string& binding : bindings) {
    const std::size_t eq = binding.find('=');
    const auto seat = eq == std::string::npos ? std::nullopt
                                              : engine::parse_int(binding.substr(0, eq));
    if (!seat || *seat < 0 || *seat >= seats) {
      throw UsageError("--agent expects SEAT=SPEC with SEAT in 0.." + std::to_string(seats - 1) +
                       ", got '" + binding + "'");
    }
    const std::string spec = binding.substr(eq + 1);
    const auto parsed = ai::parse_agent_spec(spec);
    if (!parsed) throw UsageError("unknown agent spec '" + spec + "'");
    if (!ai::supports(*parsed, rules.id())) {
      throw UsageError("agent '" + spec + "' cannot play " + std::string(rules.display_name()));
    }
    out[*seat] = spec;
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RuntimeError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_record(const engine::Match& match, const std::string& path, std::ostream& err) {
  std::ofstream out(path);
  out << engine::serialize(engine::save(match));
  if (!out) throw RuntimeError("cannot write " + path);
  err << "saved to " << path << "\n";
}

// Reads a line with terminal echo switched off when stdin is a terminal.
bool read_hidden(std::istream& in, std::string& line) {
  const bool tty = &in == &std::cin && isatty(STDIN_FILENO);
  termios saved{};
  if (tty && tcgetattr(STDIN_FILENO, &saved) == 0) {
    termios quiet = saved;
    quiet.c_lflag &= ~static_cast<tcflag_t>(ECHO);
    tcsetattr(STDIN_FILENO, TCSANOW, &quiet);
    const bool ok = static_cast<bool>(std::getline(in, line));
    tcsetattr(STDIN_FILENO, TCSANOW, &saved);
    return ok;
  }
  return static_cast<bool>(std::getline(in, line));
}

bool wants_secret(const engine::Observation& o) {
  return o.game_id == "mastermind" && o.view.value("phase", "") == "await_secret";
}

struct ListOptions {
  std::string topic;
  std::string category;
  std::optional<int> max_loc;
  std::optional<int> players;
  std::optional<double> min_rating;
  std::string gui;
};

int do_list(const ListOptions& opts, std::ostream& out) {
  catalog::Query q;
  if (!opts.topic.empty()) {
    q.topic = catalog::parse_topic(opts.topic);
    if (!q.topic) throw UsageError("unknown topic '" + opts.topic + "'");
  }
  if (!opts.category.empty()) {
    q.category = catalog::parse_category(opts.category);
    if (!q.category) throw UsageError("unknown category '" + opts.category + "'");
  }
  if (!opts.gui.empty()) {
    q.gui_value = catalog::parse_gui_value(opts.gui);
    if (!q.gui_value) throw UsageError("--gui must be low or high");
  }
  q.max_loc = opts.max_loc;
  q.player_count = opts.players;
  q.min_rating = opts.min_rating;

  const catalog::Catalog rows = catalog::filter(catalog::load_catalog(), q);
  out << std::left << std::setw(25) << "Game" << std::setw(8) << "BGG" << std::setw(7)
      << "Rating" << std::setw(5) << "LOC" << std::setw(5) << "GUI" << std::setw(8)
      << "Players" << std::setw(10) << "Category" << "Topics\n";
  for (const catalog::CatalogEntry& e : rows) {
    std::string topics;
    for (catalog::Topic t : e.topics) {
      if (!topics.empty()) topics += ", ";
      topics += catalog::to_string(t);
    }
    std::ostringstream rating;
    rating << std::fixed << std::setprecision(1) << e.bgg_rating;
    out << std::setw(25) << (e.name + (e.implemented ? " *" : "")) << std::setw(8) << e.bgg_id
        << std::setw(7) << rating.str() << std::setw(5) << e.core_loc << std::setw(5)
        << catalog::to_string(e.gui_value) << std::setw(8) << e.players.to_string()
        << std::setw(10) << catalog::to_string(e.category) << topics << "\n";
  }
  out << std::right;
  return kExitOk;
}

struct PlayOptions {
  std::string game;
  std::optional<int> seats;
  std::vector<std::string> agents;
  std::string seed;
  std::string save;
  std::string load;
};

int do_play(const PlayOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  const engine::Registry& registry = games::builtin_registry();
  if (!registry.contains(opts.game)) throw UsageError("unknown game '" + opts.game + "'");
  const auto rules = registry.get(opts.game);

  std::optional<engine::MatchRecord> record;
  if (!opts.load.empty()) {
    if (opts.seats || !opts.seed.empty()) throw UsageError("--load cannot be combined with --seats or --seed");
    try {
      record = engine::parse_record(read_file(opts.load));
    } catch (const engine::Error& e) {
      throw RuntimeError(opts.load + ": " + e.what());
    }
    if (record->game_id != opts.game) {
      throw UsageError(opts.load + " holds a " + record->game_id + " match, not " + opts.game);
    }
  }

  const int seats = record ? static_cast<int>(record->seat_names.size())
                           : opts.seats.value_or(rules->min_seats());
  if (seats < rules->min_seats() || seats > rules->max_seats()) {
    throw UsageError(std::string(rules->display_name()) + " takes " +
                     std::to_string(rules->min_seats()) + " to " +
                     std::to_string(rules->max_seats()) + " seats");
  }
  const std::map<int, std::string> bindings = parse_agent_bindings(opts.agents, *rules, seats);

  std::optional<engine::Match> match;
  if (record) {
    try {
      match.emplace(engine::load(registry, *record));
    } catch (const engine::Error& e) {
      throw RuntimeError(opts.load + ": " + e.what());
    }
  } else {
    std::vector<std::string> names;
    for (int i = 0; i < seats; ++i) {
      const auto it = bindings.find(i);
      names.push_back(it != bindings.end() ? it->second : "player" + std::to_string(i));
    }
    match.emplace(rules, names, choose_seed(opts.seed));
  }

  std::map<int, ai::Agent> agents;
  for (const auto& [seat, spec] : bindings) {
    agents.emplace(seat, ai::make_agent(spec, rules, agent_seed(match->seed(), seat)));
  }

  auto finish = [&](int code) {
    if (!opts.save.empty()) write_record(*match, opts.save, err);
    return code;
  };

  out << rules->display_name() << ", seed " << match->seed() << "\n";
  while (const std::optional<int> mover = match->to_move()) {
    const int seat = *mover;
    if (const auto it = agents.find(seat); it != agents.end()) {
      const std::string token = it->second.choose(match->observe(seat));
      match->submit(seat, token);
      out << "seat " << seat << " (" << it->second.spec().to_string() << ") plays "
          << rules->public_token(token) << "\n";
      continue;
    }
    const engine::Observation view = match->observe(seat);
    out << "\n" << render_text(view);
    const bool hidden = wants_secret(view);
    for (;;) {
      out << "seat " << seat << "> " << std::flush;
      std::string line;
      if (!(hidden ? read_hidden(in, line) : static_cast<bool>(std::getline(in, line)))) {
        out << "\n";
        return finish(kExitOk);
      }
      if (hidden) out << "(hidden)\n";
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      try {
        match->submit(seat, line);
        break;
      } catch (const engine::Error& e) {
        out << "error: " << e.what() << "\n";
      }
    }
  }
  out << "\n" << render_text(match->observe(std::nullopt));
  return finish(kExitOk);
}

struct ServeOptions {
  std::string host = "127.0.0.1";
  int tcp_port = 4000;
  int ws_port = 4001;
  std::string seed;
};

int do_serve(const ServeOptions& opts, std::ostream& out) {
  net::ServerConfig config;
  config.host = opts.host;
  config.tcp_port = static_cast<std::uint16_t>(opts.tcp_port);
  config.ws_port = static_cast<std::uint16_t>(opts.ws_port);
  if (!opts.seed.empty() || std::getenv("BOARDFORGE_SEED")) config.seed = choose_seed(opts.seed);
  net::Server server(config);
  server.start();
  out << "listening: tcp " << opts.host << ":" << server.tcp_port() << ", websocket "
      << opts.host << ":" << server.ws_port() << std::endl;
  server.stop_on_signals();
  server.wait();
  return kExitOk;
}

struct JoinOptions {
  std::string host = "127.0.0.1";
  int port = 0;
  bool websocket = false;
  std::string match;
  std::string create;
  std::string name = "player";
  std::optional<int> seat;
  std::optional<int> seats;
  std::vector<std::string> agents;
  std::string seed;
};

int do_join(const JoinOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  std::vector<std::string> seat_names;
  if (!opts.create.empty()) {
    const engine::Registry& registry = games::builtin_registry();
    if (!registry.contains(opts.create)) throw UsageError("unknown game '" + opts.create + "'");
    const auto rules = registry.get(opts.create);
    const int seats = opts.seats.value_or(rules->min_seats());
    if (seats < rules->min_seats() || seats > rules->max_seats()) {
      throw UsageError(std::string(rules->display_name()) + " takes " +
                       std::to_string(rules->min_seats()) + " to " +
                       std::to_string(rules->max_seats()) + " seats");
    }
    const auto bindings = parse_agent_bindings(opts.agents, *rules, seats);
    bool mine = false;
    for (int i = 0; i < seats; ++i) {
      if (const auto it = bindings.find(i); it != bindings.end()) {
        seat_names.push_back(it->second);
      } else {
        seat_names.push_back(mine ? "*" : opts.name);
        mine = true;
      }
    }
  }

  net::Client client(opts.websocket ? net::Transport::kWebSocket : net::Transport::kTcp,
                     opts.host, static_cast<std::uint16_t>(opts.port));
  client.hello(opts.name);
  std::string match = opts.match;
  if (!opts.create.empty()) {
    std::optional<std::uint64_t> seed;
    if (!opts.seed.empty() || std::getenv("BOARDFORGE_SEED")) seed = choose_seed(opts.seed);
    match = client.create(opts.create, seat_names, seed);
    out << "created match " << match << "\n";
  } else {
    const std::optional<int> seat = client.join(match, opts.name, opts.seat);
    if (seat) {
      out << "joined match " << match << " as seat " << *seat << "\n";
    } else {
      out << "watching match " << match << "\n";
    }
  }

  std::optional<engine::Observation> last;
  auto prompt = [&]() -> bool {
    out << "seat " << *last->viewer << "> " << std::flush;
    std::string line;
    const bool hidden = wants_secret(*last);
    for (;;) {
      if (!(hidden ? read_hidden(in, line) : static_cast<bool>(std::getline(in, line)))) return false;
      if (line.find_first_not_of(" \t\r") != std::string::npos) break;
    }
    client.move(match, line);
    return true;
  };

  for (;;) {
    const std::optional<net::Json> message = client.next(std::chrono::seconds(1));
    if (!message) {
      if (!client.connected()) {
        err << "connection lost\n";
        return kExitRuntime;
      }
      continue;
    }
    const std::string type = message->value("type", "");
    if (type == "state") {
      last = engine::observation_from_json(message->at("observation"));
      if (!last->legal_moves.empty()) {
        out << "\n" << render_text(*last);
        if (!prompt()) {
          client.send({{"type", "leave"}, {"match", match}});
          out << "\n";
          return kExitOk;
        }
      }
    } else if (type == "event") {
      const std::string kind = message->value("kind", "");
      const net::Json& detail = message->at("detail");
      if (kind == "move") {
        out << "seat " << detail.at("seat").get<int>() << " plays "
            << detail.at("token").get<std::string>() << "\n";
      } else if (kind == "seat_vacated") {
        out << "seat " << detail.at("seat").get<int>() << " left\n";
      } else if (kind == "seat_joined") {
        out << "seat " << detail.at("seat").get<int>() << " joined ("
            << detail.at("name").get<std::string>() << ")\n";
      }
    } else if (type == "error") {
      out << "error: " << message->value("message", "") << "\n";
      if (last && !last->legal_moves.empty() && last->status == engine::Status::kInProgress) {
        if (!prompt()) return kExitOk;
      }
    } else if (type == "finished") {
      if (last) out << "\n" << render_text(*last);
      return kExitOk;
    }
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Boardforge: turn-based board games, AI opponents and a game server",
               "boardforge"};
  app.require_subcommand(1);

  ListOptions list;
  auto* list_cmd = app.add_subcommand("list", "List catalogue entries");
  list_cmd->add_option("--topic", list.topic, "Topic, e.g. Graphs or \"2D Arrays\"");
  list_cmd->add_option("--category", list.category, "Dice, Deduction, Abstract, Cards, Economic");
  list_cmd->add_option("--max-loc", list.max_loc, "Maximum core LOC");
  list_cmd->add_option("--players", list.players, "Player count the game must admit");
  list_cmd->add_option("--min-rating", list.min_rating, "Minimum BGG rating");
  list_cmd->add_option("--gui", list.gui, "low or high");

  PlayOptions play;
  auto* play_cmd = app.add_subcommand("play", "Play a local match in the terminal");
  play_cmd->add_option("game", play.game, "Game id")->required();
  play_cmd->add_option("--seats", play.seats, "Number of seats");
  play_cmd->add_option("--agent", play.agents, "SEAT=SPEC, e.g. 1=pig-optimal");
  play_cmd->add_option("--seed", play.seed, "Match seed");
  play_cmd->add_option("--save", play.save, "Write the match record to FILE on exit");
  play_cmd->add_option("--load", play.load, "Resume the match record in FILE");

  ServeOptions serve;
  auto* serve_cmd = app.add_subcommand("serve", "Run the game server");
  serve_cmd->add_option("--host", serve.host, "Address to bind");
  serve_cmd->add_option("--tcp-port", serve.tcp_port, "Newline-delimited JSON port")
      ->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--ws-port", serve.ws_port, "WebSocket port")->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--seed", serve.seed, "Seed for server-chosen match seeds");

  JoinOptions join;
  auto* join_cmd = app.add_subcommand("join", "Play on a remote server");
  join_cmd->add_option("--host", join.host, "Server address");
  join_cmd->add_option("--port", join.port, "Server port")->required()->check(CLI::Range(1, 65535));
  join_cmd->add_flag("--ws", join.websocket, "Use the WebSocket transport");
  auto* match_opt = join_cmd->add_option("--match", join.match, "Match id to join");
  auto* create_opt = join_cmd->add_option("--create", join.create, "Game id to create");
  match_opt->excludes(create_opt);
  join_cmd->add_option("--name", join.name, "Player name");
  join_cmd->add_option("--seat", join.seat, "Seat to take when joining")->needs(match_opt);
  join_cmd->add_option("--seats", join.seats, "Number of seats when creating")->needs(create_opt);
  join_cmd->add_option("--agent", join.agents, "SEAT=SPEC when creating")->needs(create_opt);
  join_cmd->add_option("--seed", join.seed, "Match seed when creating")->needs(create_opt);

  std::vector<std::string> argv_store = {"boardforge"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (join_cmd->parsed() && join.match.empty() && join.create.empty()) {
      throw UsageError("join needs --match ID or --create GAME");
    }
    if (list_cmd->parsed()) return do_list(list, out);
    if (play_cmd->parsed()) return do_play(play, in, out, err);
    if (serve_cmd->parsed()) return do_serve(serve, out);
    return do_join(join, in, out, err);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    err << "boardforge: " << e.what() << "\n";
    return kExitUsage;
  } catch (const engine::Error& e) {
    err << "boardforge: " << e.what() << "\n";
    return e.code() == engine::ErrorCode::kUnknownGame || e.code() == engine::ErrorCode::kBadAgentSpec
               ? kExitUsage
               : kExitRuntime;
  } catch (const std::exception& e) {
    err << "boardforge: " << e.what() << "\n";
    return kExitRuntime;
  }
}

}  // namespace boardforge::cli
