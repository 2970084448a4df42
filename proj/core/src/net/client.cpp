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

#include "boardforge/net/client.hpp"

#include <condition_variable>
#include <deque>
#include <mutex>
#include <thread>

#include "link.hpp"

namespace boardforge::net {

using namespace detail;

struct Client::Impl {
  void receive(std::string text) {
    Json message = Json::parse(text, nullptr, false);
    if (message.is_discarded()) message = error_message(codes::kProtocol, "unparseable reply");
    std::lock_guard lock(mutex);
    inbox.push_back(std::move(message));
    ready.notify_all();
  }

  void closed() {
    std::lock_guard lock(mutex);
    open = false;
    ready.notify_all();
  }

  asio::io_context io;
  std::shared_ptr<Link> link;
  std::thread thread;
  mutable std::mutex mutex;
  std::condition_variable ready;
  std::deque<Json> inbox;
  bool open = true;
};

Client::Client(Transport transport, const std::string& host, std::uint16_t port)
    : impl_(std::make_unique<Impl>()) {
  const std::string where = host + ":" + std::to_string(port);
  try {
    tcp::resolver resolver(impl_->io);
    tcp::socket socket(impl_->io);
    asio::connect(socket, resolver.resolve(host, std::to_string(port)));
    socket.set_option(tcp::no_delay(true));
    if (transport == Transport::kWebSocket) {
      websocket::stream<tcp::socket> ws(std::move(socket));
      ws.handshake(where, "/");
      impl_->link = std::make_shared<WsLink>(std::move(ws), false);
    } else {
      impl_->link = std::make_shared<TcpLink>(std::move(socket));
    }
  } catch (const boost::system::system_error& e) {
    throw NetError("cannot connect to " + where + ": " + e.what());
  }
  Impl* impl = impl_.get();
  asio::post(impl->io, [impl] {
    impl->link->start([impl](std::string text) { impl->receive(std::move(text)); },
                      [impl] { impl->closed(); });
  });
  impl->thread = std::thread([impl] { impl->io.run(); });
}

Client::~Client() {
  close();
  if (impl_->thread.joinable()) impl_->thread.join();
}

void Client::send(const Json& message) {
  asio::post(impl_->io, [link = impl_->link,
                         text = message.dump(-1, ' ', false, Json::error_handler_t::replace)] {
    link->send(text);
  });
}

std::optional<Json> Client::next(std::chrono::milliseconds timeout) {
  std::unique_lock lock(impl_->mutex);
  impl_->ready.wait_for(lock, timeout, [&] { return !impl_->inbox.empty() || !impl_->open; });
  if (impl_->inbox.empty()) return std::nullopt;
  Json message = std::move(impl_->inbox.front());
  impl_->inbox.pop_front();
  return message;
}

bool Client::connected() const {
  std::lock_guard lock(impl_->mutex);
  return impl_->open;
}

Json Client::wait_for(std::string_view type, std::chrono::milliseconds timeout,
                      std::vector<Json>* skipped) {
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  for (;;) {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
        deadline - std::chrono::steady_clock::now());
    std::optional<Json> message = next(std::max(left, std::chrono::milliseconds(0)));
    if (!message) {
      throw NetError(connected() ? "timed out waiting for '" + std::string(type) + "'"
                                 : "connection closed");
    }
    const std::string kind = message->value("type", "");
    if (kind == type) return *message;
    if (kind == "error") {
      throw RemoteError(message->value("code", ""), message->value("message", ""));
    }
    if (skipped) skipped->push_back(std::move(*message));
  }
}

std::string Client::hello(const std::string& name) {
  send({{"type", "hello"}, {"name", name}, {"proto", kProtocolVersion}});
  return wait_for("welcome").at("session").get<std::string>();
}

std::string Client::create(const std::string& game, const std::vector<std::string>& seats,
                           std::optional<std::uint64_t> seed) {
  Json message = {{"type", "create"}, {"game", game}, {"seats", seats}};
  if (seed) message["seed"] = std::to_string(*seed);
  send(message);
  return wait_for("created").at("match").get<std::string>();
}

std::optional<int> Client::join(const std::string& match, const std::string& name,
                                std::optional<int> seat) {
  Json message = {{"type", "join"}, {"match", match}, {"name", name}};
  if (seat) message["seat"] = *seat;
  send(message);
  const Json joined = wait_for("joined");
  if (joined.at("seat").is_null()) return std::nullopt;
  return joined.at("seat").get<int>();
}

void Client::move(const std::string& match, const std::string& token) {
  send({{"type", "move"}, {"match", match}, {"token", token}});
}

void Client::close() {
  asio::post(impl_->io, [link = impl_->link] { link->close(); });
}

}  // namespace boardforge::net
