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

#include "profkit/ratelimit.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "profkit/errors.hpp"

namespace profkit {

std::chrono::steady_clock::time_point SystemClock::now() {
  return std::chrono::steady_clock::now();
}

void SystemClock::sleep_until(std::chrono::steady_clock::time_point t) {
  std::this_thread::sleep_until(t);
}

RateLimiter::RateLimiter(double max_per_second, Clock& clock)
    : max_per_second_(max_per_second), clock_(clock) {
  if (!(max_per_second > 0.0)) {
    throw ConfigError("rate limit must be positive");
  }
}

void RateLimiter::acquire() {
  std::lock_guard<std::mutex> lock(mu_);
  const auto window = std::chrono::seconds(1);
  // floor() because e.g. 2.5/s admits at most 2 dispatches per window.
  const std::size_t cap =
      static_cast<std::size_t>(std::max(1.0, std::floor(max_per_second_)));
  auto now = clock_.now();
  while (!recent_.empty() && now - recent_.front() >= window) {
    recent_.pop_front();
  }
  if (recent_.size() >= cap) {
    auto wake = recent_[recent_.size() - cap] + window;
    clock_.sleep_until(wake);
    now = clock_.now();
    if (now < wake) now = wake;
    while (!recent_.empty() && now - recent_.front() >= window) {
      recent_.pop_front();
    }
  }
  recent_.push_back(now);
}

}  // namespace profkit
