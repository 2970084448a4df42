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

#include "boardforge/net/server.hpp"

#include <map>
#include <random>
#include <thread>

#include "boardforge/games/builtin.hpp"
#include "boardforge/net/lobby.hpp"
#include "link.hpp"

namespace boardforge::net {

using namespace detail;

struct Server::Impl {
  Impl(ServerConfig config, const engine::Registry& registry)
      : config(std::move(config)),
        lobby(registry, this->config.seed ? *this->config.seed : std::random_device{}()) {}

  void listen(std::optional<tcp::acceptor>& acceptor, std::uint16_t port) {
    try {
      const tcp::endpoint endpoint(asio::ip::make_address(config.host), port);
      acceptor.emplace(io, endpoint);
    } catch (const boost::system::system_error& e) {
      throw NetError("cannot listen on " + config.host + ":" + std::to_string(port) + ": " +
                     e.what());
    }
  }

  void accept(tcp::acceptor& acceptor, bool websocket) {
    acceptor.async_accept([this, &acceptor, websocket](error_code ec, tcp::socket socket) {
      if (ec == asio::error::operation_aborted || !acceptor.is_open()) return;
      if (!ec) {
        std::shared_ptr<Link> link;
        if (websocket) {
          link = std::make_shared<WsLink>(websocket::stream<tcp::socket>(std::move(socket)), true);
        } else {
          link = std::make_shared<TcpLink>(std::move(socket));
        }
        open(std::move(link));
      }
      accept(acceptor, websocket);
    });
  }

  void open(std::shared_ptr<Link> link) {
    const ConnId id = next_conn++;
    links.emplace(id, link);
    lobby.connect(id);
    link->start([this, id](std::string text) { dispatch(lobby.handle_text(id, text)); },
                [this, id] {
                  links.erase(id);
                  dispatch(lobby.disconnect(id));
                });
  }

  void dispatch(const Outbox& out) {
    for (const Outbound& o : out) {
      const auto it = links.find(o.to);
      if (it == links.end()) continue;
      const std::shared_ptr<Link> link = it->second;
      link->send(o.message.dump(-1, ' ', false, Json::error_handler_t::replace));
      if (o.close) link->close_after_flush();
    }
  }

  void shutdown() {
    error_code ignored;
    if (tcp_acceptor) tcp_acceptor->close(ignored);
    if (ws_acceptor) ws_acceptor->close(ignored);
    if (signals) signals->cancel(ignored);
    const auto open_links = links;
    for (const auto& [id, link] : open_links) link->close();
    io.stop();
  }

  ServerConfig config;
  asio::io_context io;
  Lobby lobby;
  std::optional<tcp::acceptor> tcp_acceptor;
  std::optional<tcp::acceptor> ws_acceptor;
  std::optional<asio::signal_set> signals;
  std::map<ConnId, std::shared_ptr<Link>> links;
  ConnId next_conn = 1;
  std::thread thread;
};

Server::Server(ServerConfig config) : Server(std::move(config), games::builtin_registry()) {}

Server::Server(ServerConfig config, const engine::Registry& registry)
    : impl_(std::make_unique<Impl>(std::move(config), registry)) {}

Server::~Server() {
  stop();
  wait();
}

void Server::start() {
  if (impl_->thread.joinable()) return;
  if (impl_->config.tcp_port) impl_->listen(impl_->tcp_acceptor, *impl_->config.tcp_port);
  if (impl_->config.ws_port) impl_->listen(impl_->ws_acceptor, *impl_->config.ws_port);
  if (impl_->tcp_acceptor) impl_->accept(*impl_->tcp_acceptor, false);
  if (impl_->ws_acceptor) impl_->accept(*impl_->ws_acceptor, true);
  impl_->thread = std::thread([this] { impl_->io.run(); });
}

std::uint16_t Server::tcp_port() const {
  return impl_->tcp_acceptor ? impl_->tcp_acceptor->local_endpoint().port() : 0;
}

std::uint16_t Server::ws_port() const {
  return impl_->ws_acceptor ? impl_->ws_acceptor->local_endpoint().port() : 0;
}

void Server::stop_on_signals() {
  asio::post(impl_->io, [impl = impl_.get()] {
    impl->signals.emplace(impl->io, SIGINT, SIGTERM);
    impl->signals->async_wait([impl](error_code ec, int) {
      if (!ec) impl->shutdown();
    });
  });
}

void Server::stop() {
  if (!impl_->thread.joinable()) return;
  asio::post(impl_->io, [impl = impl_.get()] { impl->shutdown(); });
}

void Server::wait() {
  if (impl_->thread.joinable() && impl_->thread.get_id() != std::this_thread::get_id()) {
    impl_->thread.join();
  }
}

}  // namespace boardforge::net
