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

#include <deque>
#include <functional>
#include <memory>
#include <string>

#include <boost/asio.hpp>
#include <boost/beast/core.hpp>
#include <boost/beast/websocket.hpp>

namespace boardforge::net::detail {

namespace asio = boost::asio;
namespace beast = boost::beast;
namespace websocket = beast::websocket;
using tcp = asio::ip::tcp;
using boost::system::error_code;

inline constexpr std::size_t kMaxMessageBytes = 1 << 20;

// One framed, message-oriented connection. Every member must be called from
// the thread running the owning io_context.
class Link : public std::enable_shared_from_this<Link> {
 public:
  using OnMessage = std::function<void(std::string)>;
  using OnClose = std::function<void()>;

  virtual ~Link() = default;

  void start(OnMessage on_message, OnClose on_close);
  void send(std::string text);
  void close_after_flush();
  void close();

 protected:
  virtual void begin() = 0;
  virtual void write(const std::string& frame, std::function<void(error_code)> done) = 0;
  virtual std::string frame(std::string text) const { return text; }
  virtual void shutdown() = 0;

  void deliver(std::string text);

 private:
  void write_next();

  OnMessage on_message_;
  OnClose on_close_;
  std::deque<std::string> queue_;
  bool writing_ = false;
  bool closing_ = false;
  bool closed_ = false;
};

// Newline-delimited messages over a plain TCP stream.
class TcpLink final : public Link {
 public:
  explicit TcpLink(tcp::socket socket);

 protected:
  void begin() override { read(); }
  void write(const std::string& frame, std::function<void(error_code)> done) override;
  std::string frame(std::string text) const override { return text + "\n"; }
  void shutdown() override;

 private:
  void read();

  tcp::socket socket_;
  asio::streambuf buffer_;
};

// One message per WebSocket text frame. A server-side link performs the
// upgrade handshake before reading.
class WsLink final : public Link {
 public:
  WsLink(websocket::stream<tcp::socket> stream, bool accept);

 protected:
  void begin() override;
  void write(const std::string& frame, std::function<void(error_code)> done) override;
  void shutdown() override;

 private:
  void read();

  websocket::stream<tcp::socket> ws_;
  beast::flat_buffer buffer_;
  bool accept_;
};

}  // namespace boardforge::net::detail
