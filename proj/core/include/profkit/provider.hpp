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

#ifndef PROFKIT_PROVIDER_HPP
#define PROFKIT_PROVIDER_HPP

#include <filesystem>
#include <memory>
#include <string>
#include <unordered_map>

namespace profkit {

class LlmProvider {
 public:
  virtual ~LlmProvider() = default;

  // Returns the completion text. Never returns an empty string; failures are
  // typed errors (TransportError for wire problems, DataError for malformed
  // payloads).
  virtual std::string complete(const std::string& system_text,
                               const std::string& user_text,
                               int max_output_tokens) = 0;

  virtual int context_limit_tokens() const = 0;
};

// Deterministic stand-in: looks up sha256(system + "\x1f" + user) in a
// transcript; on a miss, derives a stable completion from the request digest
// so any plan runs reproducibly without a transcript.
class MockProvider : public LlmProvider {
 public:
  explicit MockProvider(int context_limit = 128000);

  // Transcript: JSONL of {"request_sha256": ..., "completion": ...}.
  static std::unique_ptr<MockProvider> from_transcript(
      const std::filesystem::path& path, int context_limit = 128000);

  void add_canned(const std::string& system_text, const std::string& user_text,
                  std::string completion);

  std::string complete(const std::string& system_text,
                       const std::string& user_text,
                       int max_output_tokens) override;
  int context_limit_tokens() const override { return context_limit_; }

  static std::string request_digest(const std::string& system_text,
                                    const std::string& user_text);

 private:
  int context_limit_;
  std::unordered_map<std::string, std::string> canned_;
};

// Chat-completions JSON over HTTP: POST {"model", "messages":[system,user],
// "max_tokens", "temperature"} to endpoint; reads
// choices[0].message.content. API key read from the named env var at
// construction.
class HttpChatProvider : public LlmProvider {
 public:
  HttpChatProvider(std::string endpoint, std::string model,
                   std::string api_key, int context_limit = 128000,
                   double temperature = 0.0);

  std::string complete(const std::string& system_text,
                       const std::string& user_text,
                       int max_output_tokens) override;
  int context_limit_tokens() const override { return context_limit_; }

 private:
  std::string endpoint_;
  std::string model_;
  std::string api_key_;
  int context_limit_;
  double temperature_;
};

// Provider config JSON: {"kind": "mock"|"http-chat", "endpoint", "model",
// "api_key_env", "context_limit_tokens", "transcript"}. Unknown kind is a
// ConfigError.
std::unique_ptr<LlmProvider> load_provider(const std::filesystem::path& config_path);

}  // namespace profkit

#endif  // PROFKIT_PROVIDER_HPP
