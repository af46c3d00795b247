// Copyright 2026 The mpcsdg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <chrono>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "mpcsdg/runtime/channel.h"

namespace mpcsdg {

struct Endpoint {
  std::string host;
  uint16_t port = 0;

  // Parses "host:port". Throws ParameterError.
  static Endpoint Parse(const std::string& text);
  std::string ToString() const;
};

// Length-prefixed frames over a connected TCP socket. A reader thread feeds
// incoming frames into a queue so Recv never blocks the sender side.
class TcpChannel : public Channel {
 public:
  explicit TcpChannel(int fd);
  ~TcpChannel() override;
  TcpChannel(const TcpChannel&) = delete;
  TcpChannel& operator=(const TcpChannel&) = delete;

  void Send(const TransportFrame& frame) override;
  TransportFrame Recv() override;
  TransportFrame RecvFor(std::chrono::milliseconds timeout);
  void Close() override;

 private:
  void ReadLoop();

  int fd_;
  std::mutex write_mu_;
  FrameQueue inbox_;
  std::thread reader_;
};

class TcpListener {
 public:
  // Binds and listens on the endpoint. Port 0 picks a free port.
  explicit TcpListener(const Endpoint& endpoint);
  ~TcpListener();
  TcpListener(const TcpListener&) = delete;
  TcpListener& operator=(const TcpListener&) = delete;

  uint16_t port() const { return port_; }
  // Throws TransportError on timeout.
  std::shared_ptr<TcpChannel> Accept(std::chrono::milliseconds timeout);

 private:
  int fd_ = -1;
  uint16_t port_ = 0;
};

// Connects, retrying until `timeout` elapses. Throws TransportError.
std::shared_ptr<TcpChannel> Dial(const Endpoint& endpoint,
                                 std::chrono::milliseconds timeout);

}  // namespace mpcsdg
