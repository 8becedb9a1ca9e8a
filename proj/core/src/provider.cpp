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

#include "profkit/provider.hpp"

#include <httplib.h>

#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>

#include "profkit/errors.hpp"
#include "profkit/util.hpp"

namespace profkit {

using json = nlohmann::json;

MockProvider::MockProvider(int context_limit) : context_limit_(context_limit) {
  if (context_limit < 1) throw ConfigError("context limit must be positive");
}

std::string MockProvider::request_digest(const std::string& system_text,
                                         const std::string& user_text) {
  return sha256_hex(system_text + "\x1f" + user_text);
}

std::unique_ptr<MockProvider> MockProvider::from_transcript(
    const std::filesystem::path& path, int context_limit) {
  auto provider = std::make_unique<MockProvider>(context_limit);
  std::istringstream lines(read_file(path));
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    json entry;
    try {
      entry = json::parse(line);
    } catch (const json::exception& e) {
      throw DataError(path.string() + " line " + std::to_string(line_no) +
                      ": " + e.what());
    }
    if (!entry.contains("request_sha256") || !entry.contains("completion")) {
      throw DataError(path.string() + " line " + std::to_string(line_no) +
                      ": transcript entry needs request_sha256 and completion");
    }
    provider->canned_[entry.at("request_sha256").get<std::string>()] =
        entry.at("completion").get<std::string>();
  }
  return provider;
}

void MockProvider::add_canned(const std::string& system_text,
                              const std::string& user_text,
                              std::string completion) {
  canned_[request_digest(system_text, user_text)] = std::move(completion);
}

std::string MockProvider::complete(const std::string& system_text,
                                   const std::string& user_text,
                                   int max_output_tokens) {
  if (max_output_tokens < 1) {
    throw ConfigError("max_output_tokens must be positive");
  }
  const std::string digest = request_digest(system_text, user_text);
  auto it = canned_.find(digest);
  if (it != canned_.end()) {
    if (it->second.empty()) {
      throw DataError("transcript completion for " + digest + " is empty");
    }
    return it->second;
  }
  // No transcript entry: fabricate a stable completion so plans still run
  // deterministically. The digest prefix keeps distinct requests distinct.
  return "[mock:" + digest.substr(0, 16) + "]";
}

HttpChatProvider::HttpChatProvider(std::string endpoint, std::string model,
                                   std::string api_key, int context_limit,
                                   double temperature)
    : endpoint_(std::move(endpoint)),
      model_(std::move(model)),
      api_key_(std::move(api_key)),
      context_limit_(context_limit),
      temperature_(temperature) {
  if (endpoint_.empty()) throw ConfigError("chat endpoint must not be empty");
  if (context_limit_ < 1) throw ConfigError("context limit must be positive");
}

std::string HttpChatProvider::complete(const std::string& system_text,
                                       const std::string& user_text,
                                       int max_output_tokens) {
  if (max_output_tokens < 1) {
    throw ConfigError("max_output_tokens must be positive");
  }
  std::size_t scheme_end = endpoint_.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("malformed endpoint: " + endpoint_);
  }
  std::size_t path_start = endpoint_.find('/', scheme_end + 3);
  std::string base = path_start == std::string::npos
                         ? endpoint_
                         : endpoint_.substr(0, path_start);
  std::string path =
      path_start == std::string::npos ? "/" : endpoint_.substr(path_start);

  json body = {
      {"model", model_},
      {"messages",
       json::array({{{"role", "system"}, {"content", system_text}},
                    {{"role", "user"}, {"content", user_text}}})},
      {"max_tokens", max_output_tokens},
      {"temperature", temperature_},
  };

  httplib::Client client(base);
  client.set_connection_timeout(30);
  client.set_read_timeout(120);
  httplib::Headers headers;
  if (!api_key_.empty()) {
    headers.emplace("Authorization", "Bearer " + api_key_);
  }
  auto res = client.Post(path, headers, body.dump(), "application/json");
  if (!res) {
    throw TransportError("chat request failed: " +
                         httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw TransportError("chat endpoint returned HTTP " +
                         std::to_string(res->status));
  }
  json reply;
  try {
    reply = json::parse(res->body);
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed chat response: ") + e.what());
  }
  if (!reply.contains("choices") || !reply.at("choices").is_array() ||
      reply.at("choices").empty()) {
    throw DataError("chat response has no choices");
  }
  const json& first = reply.at("choices").at(0);
  if (!first.contains("message") || !first.at("message").contains("content")) {
    throw DataError("chat response choice has no message content");
  }
  std::string text = first.at("message").at("content").get<std::string>();
  if (text.empty()) throw DataError("chat completion was empty");
  return text;
}

std::unique_ptr<LlmProvider> load_provider(
    const std::filesystem::path& config_path) {
  json config;
  try {
    config = json::parse(read_file(config_path));
  } catch (const json::exception& e) {
    throw ConfigError(config_path.string() + ": " + e.what());
  }
  if (!config.contains("kind")) {
    throw ConfigError(config_path.string() + ": provider config needs a kind");
  }
  const std::string kind = config.at("kind").get<std::string>();
  const int context_limit = config.value("context_limit_tokens", 128000);
  if (kind == "mock") {
    if (config.contains("transcript")) {
      std::filesystem::path transcript =
          config.at("transcript").get<std::string>();
      if (transcript.is_relative()) {
        transcript = config_path.parent_path() / transcript;
      }
      return MockProvider::from_transcript(transcript, context_limit);
    }
    return std::make_unique<MockProvider>(context_limit);
  }
  if (kind == "http-chat") {
    if (!config.contains("endpoint") || !config.contains("model")) {
      throw ConfigError(config_path.string() +
                        ": http-chat config needs endpoint and model");
    }
    std::string api_key;
    if (config.contains("api_key_env")) {
      const std::string env_name = config.at("api_key_env").get<std::string>();
      if (const char* value = std::getenv(env_name.c_str())) api_key = value;
    }
    return std::make_unique<HttpChatProvider>(
        config.at("endpoint").get<std::string>(),
        config.at("model").get<std::string>(), api_key, context_limit,
        config.value("temperature", 0.0));
  }
  throw ConfigError(config_path.string() + ": unknown provider kind \"" + kind +
                    "\"");
}

}  // namespace profkit
