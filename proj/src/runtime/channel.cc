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


#include "mpcsdg/runtime/channel.h"

#include "mpcsdg/errors.h"

namespace mpcsdg {

void FrameQueue::Push(TransportFrame frame) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (closed_) throw TransportError(reason_);
    frames_.push_back(std::move(frame));
  }
  cv_.notify_all();
}

TransportFrame FrameQueue::Pop() {
  std::unique_lock<std::mutex> lock(mu_);
  cv_.wait(lock, [&] { return closed_ || !frames_.empty(); });
  if (frames_.empty()) throw TransportError(reason_);
  TransportFrame f = std::move(frames_.front());
  frames_.pop_front();
  return f;
}

TransportFrame FrameQueue::PopFor(std::chrono::milliseconds timeout) {
  std::unique_lock<std::mutex> lock(mu_);
  if (!cv_.wait_for(lock, timeout,
                    [&] { return closed_ || !frames_.empty(); })) {
    throw TransportError("timed out waiting for a frame");
  }
  if (frames_.empty()) throw TransportError(reason_);
  TransportFrame f = std::move(frames_.front());
  frames_.pop_front();
  return f;
}

void FrameQueue::Close(const std::string& reason) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (closed_) return;
    closed_ = true;
    reason_ = reason;
  }
  cv_.notify_all();
}

bool FrameQueue::closed() const {
  std::lock_guard<std::mutex> lock(mu_);
  return closed_;
}

void InProcessChannel::Send(const TransportFrame& frame) { out_->Push(frame); }

TransportFrame InProcessChannel::Recv() { return in_->Pop(); }

void InProcessChannel::Close() {
  out_->Close("peer closed the channel");
  in_->Close("channel closed");
}

std::pair<std::shared_ptr<Channel>, std::shared_ptr<Channel>>
MakeInProcessPair() {
  auto ab = std::make_shared<FrameQueue>();
  auto ba = std::make_shared<FrameQueue>();
  return {std::make_shared<InProcessChannel>(ab, ba),
          std::make_shared<InProcessChannel>(ba, ab)};
}

}  // namespace mpcsdg
