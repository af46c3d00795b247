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


#include "mpcsdg/runtime/tcp_channel.h"

#include <arpa/inet.h>
#include <netdb.h>
#include <netinet/in.h>
#include <netinet/tcp.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>
#include <vector>

#include "mpcsdg/errors.h"

namespace mpcsdg {

Endpoint Endpoint::Parse(const std::string& text) {
  const auto colon = text.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == text.size()) {
    throw ParameterError("expected host:port, got '" + text + "'");
  }
  Endpoint e;
  e.host = text.substr(0, colon);
  try {
    const unsigned long p = std::stoul(text.substr(colon + 1));
    if (p > 65535) throw std::out_of_range("port");
    e.port = static_cast<uint16_t>(p);
  } catch (const std::exception&) {
    throw ParameterError("bad port in '" + text + "'");
  }
  return e;
}

std::string Endpoint::ToString() const {
  return host + ":" + std::to_string(port);
}

namespace {

bool WriteAll(int fd, const uint8_t* p, std::size_t n) {
  while (n > 0) {
    const ssize_t w = ::send(fd, p, n, MSG_NOSIGNAL);
    if (w < 0) {
      if (errno == EINTR) continue;
      return false;
    }
    p += w;
    n -= static_cast<std::size_t>(w);
  }
  return true;
}

bool ReadAll(int fd, uint8_t* p, std::size_t n) {
  while (n > 0) {
    const ssize_t r = ::recv(fd, p, n, 0);
    if (r < 0 && errno == EINTR) continue;
    if (r <= 0) return false;
    p += r;
    n -= static_cast<std::size_t>(r);
  }
  return true;
}

sockaddr_in Resolve(const Endpoint& e) {
  addrinfo hints{};
  hints.ai_family = AF_INET;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* res = nullptr;
  const int rc = ::getaddrinfo(e.host.c_str(), nullptr, &hints, &res);
  if (rc != 0 || res == nullptr) {
    throw TransportError("cannot resolve host '" + e.host + "'");
  }
  sockaddr_in addr{};
  std::memcpy(&addr, res->ai_addr, sizeof(addr));
  ::freeaddrinfo(res);
  addr.sin_port = htons(e.port);
  return addr;
}

void SetNoDelay(int fd) {
  int one = 1;
  ::setsockopt(fd, IPPROTO_TCP, TCP_NODELAY, &one, sizeof(one));
}

}  // namespace

TcpChannel::TcpChannel(int fd) : fd_(fd) {
  SetNoDelay(fd_);
  reader_ = std::thread([this] { ReadLoop(); });
}

TcpChannel::~TcpChannel() {
  Close();
  if (reader_.joinable()) reader_.join();
  ::close(fd_);
}

void TcpChannel::ReadLoop() {
  while (true) {
    uint8_t len_bytes[4];
    if (!ReadAll(fd_, len_bytes, 4)) break;
    const uint32_t len = (uint32_t{len_bytes[0]} << 24) |
                         (uint32_t{len_bytes[1]} << 16) |
                         (uint32_t{len_bytes[2]} << 8) | len_bytes[3];
    std::vector<uint8_t> body(len);
    if (!ReadAll(fd_, body.data(), len)) break;
    try {
      inbox_.Push(ParseFrameBody(body.data(), body.size()));
    } catch (const Error& e) {
      inbox_.Close(e.what());
      return;
    }
  }
  inbox_.Close("connection closed by peer");
}

void TcpChannel::Send(const TransportFrame& frame) {
  const auto bytes = SerializeFrame(frame);
  std::lock_guard<std::mutex> lock(write_mu_);
  if (!WriteAll(fd_, bytes.data(), bytes.size())) {
    throw TransportError(std::string("send failed: ") + std::strerror(errno));
  }
}

TransportFrame TcpChannel::Recv() { return inbox_.Pop(); }

TransportFrame TcpChannel::RecvFor(std::chrono::milliseconds timeout) {
  return inbox_.PopFor(timeout);
}

void TcpChannel::Close() { ::shutdown(fd_, SHUT_RDWR); }

TcpListener::TcpListener(const Endpoint& endpoint) {
  sockaddr_in addr = Resolve(endpoint);
  fd_ = ::socket(AF_INET, SOCK_STREAM, 0);
  if (fd_ < 0) throw TransportError("socket() failed");
  int one = 1;
  ::setsockopt(fd_, SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  if (::bind(fd_, reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
    const std::string why = std::strerror(errno);
    ::close(fd_);
    throw TransportError("cannot bind " + endpoint.ToString() + ": " + why);
  }
  if (::listen(fd_, 16) != 0) {
    ::close(fd_);
    throw TransportError("listen() failed");
  }
  socklen_t len = sizeof(addr);
  ::getsockname(fd_, reinterpret_cast<sockaddr*>(&addr), &len);
  port_ = ntohs(addr.sin_port);
}

TcpListener::~TcpListener() {
  if (fd_ >= 0) ::close(fd_);
}

std::shared_ptr<TcpChannel> TcpListener::Accept(
    std::chrono::milliseconds timeout) {
  pollfd pfd{fd_, POLLIN, 0};
  const int rc = ::poll(&pfd, 1, static_cast<int>(timeout.count()));
  if (rc <= 0) throw TransportError("timed out waiting for a connection");
  const int c = ::accept(fd_, nullptr, nullptr);
  if (c < 0) throw TransportError("accept() failed");
  return std::make_shared<TcpChannel>(c);
}

std::shared_ptr<TcpChannel> Dial(const Endpoint& endpoint,
                                 std::chrono::milliseconds timeout) {
  const sockaddr_in addr = Resolve(endpoint);
  const auto deadline = std::chrono::steady_clock::now() + timeout;
  while (true) {
    const int fd = ::socket(AF_INET, SOCK_STREAM, 0);
    if (fd < 0) throw TransportError("socket() failed");
    if (::connect(fd, reinterpret_cast<const sockaddr*>(&addr),
                  sizeof(addr)) == 0) {
      return std::make_shared<TcpChannel>(fd);
    }
    ::close(fd);
    if (std::chrono::steady_clock::now() >= deadline) {
      throw TransportError("cannot reach " + endpoint.ToString());
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
  }
}

}  // namespace mpcsdg
