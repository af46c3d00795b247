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
#include <condition_variable>
#include <deque>
#include <memory>
#include <mutex>
#include <utility>

#include "mpcsdg/runtime/frame.h"

namespace mpcsdg {

// Blocking FIFO of frames. Close() wakes every waiter; Pop on a closed, empty
// queue throws TransportError.
class FrameQueue {
 public:
  void Push(TransportFrame frame);
  TransportFrame Pop();
  // Same as Pop but gives up after `timeout`.
  TransportFrame PopFor(std::chrono::milliseconds timeout);
  void Close(const std::string& reason = "channel closed");
  bool closed() const;

 private:
  mutable std::mutex mu_;
  std::condition_variable cv_;
  std::deque<TransportFrame> frames_;
  bool closed_ = false;
  std::string reason_;
};

// One direction-pair between two endpoints.
class Channel {
 public:
  virtual ~Channel() = default;
  virtual void Send(const TransportFrame& frame) = 0;
  virtual TransportFrame Recv() = 0;
  virtual void Close() = 0;
};

class InProcessChannel : public Channel {
 public:
  InProcessChannel(std::shared_ptr<FrameQueue> out,
                   std::shared_ptr<FrameQueue> in)
      : out_(std::move(out)), in_(std::move(in)) {}

  void Send(const TransportFrame& frame) override;
  TransportFrame Recv() override;
  void Close() override;

 private:
  std::shared_ptr<FrameQueue> out_;
  std::shared_ptr<FrameQueue> in_;
};

std::pair<std::shared_ptr<Channel>, std::shared_ptr<Channel>>
MakeInProcessPair();

}  // namespace mpcsdg
