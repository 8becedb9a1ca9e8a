// Copyright 2026 The Profkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PROFKIT_RATELIMIT_HPP
#define PROFKIT_RATELIMIT_HPP

#include <chrono>
#include <deque>
#include <mutex>

namespace profkit {

// Injectable time source so the limiter is testable without real sleeps.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual std::chrono::steady_clock::time_point now() = 0;
  virtual void sleep_until(std::chrono::steady_clock::time_point t) = 0;
};

class SystemClock : public Clock {
 public:
  std::chrono::steady_clock::time_point now() override;
  void sleep_until(std::chrono::steady_clock::time_point t) override;
};

// Virtual clock for tests: sleep_until advances time instantly.
class ManualClock : public Clock {
 public:
  std::chrono::steady_clock::time_point now() override { return now_; }
  void sleep_until(std::chrono::steady_clock::time_point t) override {
    if (t > now_) now_ = t;
  }
  void advance(std::chrono::steady_clock::duration d) { now_ += d; }

 private:
  std::chrono::steady_clock::time_point now_{};
};

// Hard cap on dispatches per sliding 1-second window. acquire() blocks (via
// the clock) until admitting one more dispatch keeps every 1-second window at
// or under the cap. Thread-safe; a single limiter is shared by all workers
// talking to one service.
class RateLimiter {
 public:
  RateLimiter(double max_per_second, Clock& clock);

  void acquire();

 private:
  double max_per_second_;
  Clock& clock_;
  std::mutex mu_;
  std::deque<std::chrono::steady_clock::time_point> recent_;
};

}  // namespace profkit

#endif  // PROFKIT_RATELIMIT_HPP
