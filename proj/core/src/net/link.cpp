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

#include "link.hpp"

namespace boardforge::net::detail {

void Link::start(OnMessage on_message, OnClose on_close) {
  on_message_ = std::move(on_message);
  on_close_ = std::move(on_close);
  begin();
}

void Link::send(std::string text) {
  if (closed_ || closing_) return;
  queue_.push_back(frame(std::move(text)));
  if (!writing_) write_next();
}

void Link::close_after_flush() {
  closing_ = true;
  if (!writing_) close();
}

void Link::close() {
  if (closed_) return;
  closed_ = true;
  shutdown();
  if (on_close_) {
    OnClose callback = std::move(on_close_);
    on_close_ = nullptr;
    callback();
  }
}

void Link::deliver(std::string text) {
  if (!closed_ && !closing_ && on_message_) on_message_(std::move(text));
}

void Link::write_next() {
  if (queue_.empty()) {
    writing_ = false;
    if (closing_) close();
    return;
  }
  writing_ = true;
  write(queue_.front(), [self = shared_from_this()](error_code ec) {
    if (ec) {
      self->close();
      return;
    }
    self->queue_.pop_front();
    self->write_next();
  });
}

TcpLink::TcpLink(tcp::socket socket)
    : socket_(std::move(socket)), buffer_(kMaxMessageBytes) {}

void TcpLink::read() {
  asio::async_read_until(
      socket_, buffer_, '\n',
      [self = std::static_pointer_cast<TcpLink>(shared_from_this())](error_code ec, std::size_t n) {
        if (ec) {
          self->close();
          return;
        }
        std::string line(asio::buffers_begin(self->buffer_.data()),
                         asio::buffers_begin(self->buffer_.data()) + static_cast<std::ptrdiff_t>(n - 1));
        self->buffer_.consume(n);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) self->deliver(std::move(line));
        self->read();
      });
}

void TcpLink::write(const std::string& frame, std::function<void(error_code)> done) {
  asio::async_write(socket_, asio::buffer(frame),
                    [done = std::move(done)](error_code ec, std::size_t) { done(ec); });
}

void TcpLink::shutdown() {
  error_code ignored;
  socket_.shutdown(tcp::socket::shutdown_both, ignored);
  socket_.close(ignored);
}

WsLink::WsLink(websocket::stream<tcp::socket> stream, bool accept)
    : ws_(std::move(stream)), accept_(accept) {
  ws_.read_message_max(kMaxMessageBytes);
  ws_.text(true);
}

void WsLink::begin() {
  if (!accept_) {
    read();
    return;
  }
  ws_.async_accept([self = std::static_pointer_cast<WsLink>(shared_from_this())](error_code ec) {
    if (ec) {
      self->close();
      return;
    }
    self->read();
  });
}

void WsLink::read() {
  ws_.async_read(buffer_, [self = std::static_pointer_cast<WsLink>(shared_from_this())](
                              error_code ec, std::size_t) {
    if (ec) {
      self->close();
      return;
    }
    std::string text = beast::buffers_to_string(self->buffer_.data());
    self->buffer_.consume(self->buffer_.size());
    self->deliver(std::move(text));
    self->read();
  });
}

void WsLink::write(const std::string& frame, std::function<void(error_code)> done) {
  ws_.async_write(asio::buffer(frame),
                  [done = std::move(done)](error_code ec, std::size_t) { done(ec); });
}

void WsLink::shutdown() {
  error_code ignored;
  ws_.next_layer().shutdown(tcp::socket::shutdown_both, ignored);
  ws_.next_layer().close(ignored);
}

}  // namespace boardforge::net::detail
