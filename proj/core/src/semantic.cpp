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

#include "profkit/semantic.hpp"

#include <httplib.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

#include "profkit/errors.hpp"
#include "profkit/util.hpp"

namespace profkit {

using json = nlohmann::json;

namespace {

double cosine(const std::vector<double>& a, const std::vector<double>& b) {
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

}  // namespace

SemanticScores greedy_match_score(const TokenEmbeddings& candidate,
                                  const TokenEmbeddings& reference) {
  if (candidate.vectors.empty() || reference.vectors.empty()) {
    throw DataError("greedy match needs non-empty embeddings on both sides");
  }
  const std::size_t dim = candidate.vectors.front().size();
  if (reference.vectors.front().size() != dim) {
    throw DataError("embedding dimensions differ between candidate and reference");
  }

  SemanticScores s;
  std::vector<double> ref_best(reference.vectors.size(), -1.0);
  double precision_sum = 0.0;
  for (const auto& cvec : candidate.vectors) {
    double best = -1.0;
    for (std::size_t j = 0; j < reference.vectors.size(); ++j) {
      double sim = cosine(cvec, reference.vectors[j]);
      best = std::max(best, sim);
      ref_best[j] = std::max(ref_best[j], sim);
    }
    precision_sum += best;
  }
  double recall_sum = 0.0;
  for (double v : ref_best) recall_sum += v;

  s.precision = precision_sum / static_cast<double>(candidate.vectors.size());
  s.recall = recall_sum / static_cast<double>(reference.vectors.size());
  s.f1 = (s.precision + s.recall) > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

TokenEmbeddings parse_embeddings(std::string_view json_text,
                                 const std::vector<std::string>& drop_markers) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed embedding JSON: ") + e.what());
  }
  if (!j.contains("tokens") || !j.contains("vectors")) {
    throw DataError("embedding JSON needs tokens and vectors fields");
  }
  auto tokens = j["tokens"].get<std::vector<std::string>>();
  auto vectors = j["vectors"].get<std::vector<std::vector<double>>>();
  // The HTTP contract omits dim; files declare it. Infer when absent.
  const std::size_t dim = j.contains("dim")
                              ? j["dim"].get<std::size_t>()
                              : (vectors.empty() ? 0 : vectors.front().size());
  if (dim == 0) throw DataError("embedding dimension must be >= 1");
  if (tokens.empty()) throw DataError("embedding token list is empty");
  if (tokens.size() != vectors.size()) {
    throw DataError("embedding tokens/vectors length mismatch: " +
                    std::to_string(tokens.size()) + " vs " +
                    std::to_string(vectors.size()));
  }
  TokenEmbeddings out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (vectors[i].size() != dim) {
      throw DataError("vector " + std::to_string(i) + " has dimension " +
                      std::to_string(vectors[i].size()) + ", declared " +
                      std::to_string(dim));
    }
    for (double v : vectors[i]) {
      if (!std::isfinite(v)) {
        throw DataError("vector " + std::to_string(i) +
                        " has a non-finite component");
      }
    }
    bool marker = std::find(drop_markers.begin(), drop_markers.end(),
                            tokens[i]) != drop_markers.end();
    if (marker) continue;
    out.tokens.push_back(tokens[i]);
    out.vectors.push_back(vectors[i]);
  }
  if (out.tokens.empty()) {
    throw DataError("embedding file has only marker tokens");
  }
  return out;
}

TokenEmbeddings load_embeddings(const std::filesystem::path& path,
                                const std::vector<std::string>& drop_markers) {
  try {
    return parse_embeddings(read_file(path), drop_markers);
  } catch (const DataError& e) {
    throw DataError(path.string() + ": " + e.what());
  }
}

TokenEmbeddings fetch_embeddings(const std::string& endpoint,
                                 const std::string& text) {
  std::size_t scheme_end = endpoint.find("://");
  if (scheme_end == std::string::npos) {
    throw TransportError("malformed embedding endpoint: " + endpoint);
  }
  std::size_t path_start = endpoint.find('/', scheme_end + 3);
  std::string base = path_start == std::string::npos
                         ? endpoint
                         : endpoint.substr(0, path_start);
  std::string path =
      path_start == std::string::npos ? "/" : endpoint.substr(path_start);

  httplib::Client client(base);
  client.set_connection_timeout(30);
  client.set_read_timeout(120);
  json body = {{"text", text}};
  auto res = client.Post(path, body.dump(), "application/json");
  if (!res) {
    throw TransportError("embedding request failed: " +
                         httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw TransportError("embedding endpoint returned HTTP " +
                         std::to_string(res->status));
  }
  return parse_embeddings(res->body);
}

}  // namespace profkit
