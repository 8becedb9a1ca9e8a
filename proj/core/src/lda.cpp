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

#include "profkit/lda.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdio>
#include <iterator>
#include <random>
#include <set>
#include <unordered_map>

#include "profkit/errors.hpp"
#include "profkit/util.hpp"

namespace profkit {

using json = nlohmann::json;

namespace {

// Uniform double in [0,1) from the top 53 bits; fixed mapping so results are
// identical across platforms.
double next_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string format_prob(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

LdaModel fit_lda(const std::vector<TokenizedDoc>& docs, const LdaParams& params) {
  if (params.num_topics < 2) throw ConfigError("LDA needs at least 2 topics");
  if (params.iterations < 1) throw ConfigError("LDA needs at least 1 iteration");

  // Vocabulary in first-appearance order keeps fitting deterministic.
  std::unordered_map<std::string, int> word_ids;
  std::vector<std::string> vocabulary;
  std::vector<std::vector<int>> doc_words(docs.size());
  std::size_t total_tokens = 0;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    doc_words[d].reserve(docs[d].tokens.size());
    for (const std::string& token : docs[d].tokens) {
      auto [it, inserted] =
          word_ids.emplace(token, static_cast<int>(vocabulary.size()));
      if (inserted) vocabulary.push_back(token);
      doc_words[d].push_back(it->second);
      ++total_tokens;
    }
  }
  if (vocabulary.empty()) throw DataError("LDA corpus has an empty vocabulary");
  if (static_cast<std::size_t>(params.num_topics) > total_tokens) {
    throw DataError("more topics than corpus tokens");
  }

  const int K = params.num_topics;
  const int V = static_cast<int>(vocabulary.size());
  const double alpha = params.alpha > 0.0 ? params.alpha : 50.0 / K;
  const double beta = params.beta;
  const double v_beta = static_cast<double>(V) * beta;

  LdaModel model;
  model.num_topics = K;
  model.alpha = alpha;
  model.beta = beta;
  model.seed = params.seed;
  model.iterations = params.iterations;
  model.vocabulary = vocabulary;
  model.topic_word_counts.assign(static_cast<std::size_t>(K),
                                 std::vector<int>(static_cast<std::size_t>(V), 0));
  model.doc_topic_counts.assign(docs.size(),
                                std::vector<int>(static_cast<std::size_t>(K), 0));
  model.topic_totals.assign(static_cast<std::size_t>(K), 0);

  std::mt19937_64 rng(params.seed);
  std::vector<std::vector<int>> assignments(docs.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    assignments[d].resize(doc_words[d].size());
    for (std::size_t pos = 0; pos < doc_words[d].size(); ++pos) {
      int k = static_cast<int>(next_double(rng) * K);
      if (k == K) k = K - 1;
      assignments[d][pos] = k;
      int w = doc_words[d][pos];
      ++model.topic_word_counts[static_cast<std::size_t>(k)][static_cast<std::size_t>(w)];
      ++model.doc_topic_counts[d][static_cast<std::size_t>(k)];
      ++model.topic_totals[static_cast<std::size_t>(k)];
    }
  }

  std::vector<double> weights(static_cast<std::size_t>(K));
  for (int iter = 0; iter < params.iterations; ++iter) {
    for (std::size_t d = 0; d < docs.size(); ++d) {
      for (std::size_t pos = 0; pos < doc_words[d].size(); ++pos) {
        const int w = doc_words[d][pos];
        const int old_k = assignments[d][pos];
        --model.topic_word_counts[static_cast<std::size_t>(old_k)][static_cast<std::size_t>(w)];
        --model.doc_topic_counts[d][static_cast<std::size_t>(old_k)];
        --model.topic_totals[static_cast<std::size_t>(old_k)];

        double total = 0.0;
        for (int k = 0; k < K; ++k) {
          double weight =
              (model.doc_topic_counts[d][static_cast<std::size_t>(k)] + alpha) *
              (model.topic_word_counts[static_cast<std::size_t>(k)][static_cast<std::size_t>(w)] + beta) /
              (model.topic_totals[static_cast<std::size_t>(k)] + v_beta);
          total += weight;
          weights[static_cast<std::size_t>(k)] = total;
        }
        const double u = next_double(rng) * total;
        int new_k = K - 1;
        for (int k = 0; k < K; ++k) {
          if (u < weights[static_cast<std::size_t>(k)]) {
            new_k = k;
            break;
          }
        }
        assignments[d][pos] = new_k;
        ++model.topic_word_counts[static_cast<std::size_t>(new_k)][static_cast<std::size_t>(w)];
        ++model.doc_topic_counts[d][static_cast<std::size_t>(new_k)];
        ++model.topic_totals[static_cast<std::size_t>(new_k)];
      }
    }
  }
  return model;
}

int dominant_topic(const LdaModel& model, std::size_t doc_index) {
  if (doc_index >= model.doc_topic_counts.size()) {
    throw DataError("document index out of range");
  }
  const std::vector<int>& row = model.doc_topic_counts[doc_index];
  int best = 0;
  for (int k = 1; k < model.num_topics; ++k) {
    if (row[static_cast<std::size_t>(k)] > row[static_cast<std::size_t>(best)]) {
      best = k;
    }
  }
  return best;
}

double diversity_score(const std::vector<TopicAssignment>& assignments) {
  if (assignments.empty()) {
    throw DataError("diversity score needs at least one assignment");
  }
  std::set<int> unique;
  for (const TopicAssignment& a : assignments) unique.insert(a.dominant_topic);
  return static_cast<double>(unique.size()) /
         static_cast<double>(assignments.size());
}

DiversityBand diversity_band(double score) {
  if (score < 0.3) return DiversityBand::Stable;
  if (score > 0.7) return DiversityBand::Evolving;
  return DiversityBand::Middle;
}

std::string_view diversity_band_name(DiversityBand band) {
  switch (band) {
    case DiversityBand::Stable: return "stable";
    case DiversityBand::Middle: return "middle";
    case DiversityBand::Evolving: return "evolving";
  }
  throw DataError("invalid diversity band");
}

std::map<int, std::vector<double>> year_heatmap(
    const std::vector<TopicAssignment>& assignments, int num_topics) {
  std::map<int, std::vector<int>> counts;
  for (const TopicAssignment& a : assignments) {
    auto [it, inserted] = counts.try_emplace(
        a.year, std::vector<int>(static_cast<std::size_t>(num_topics), 0));
    if (a.dominant_topic < 0 || a.dominant_topic >= num_topics) {
      throw DataError("dominant topic out of range");
    }
    ++it->second[static_cast<std::size_t>(a.dominant_topic)];
  }
  std::map<int, std::vector<double>> rows;
  for (const auto& [year, row] : counts) {
    int total = 0;
    for (int c : row) total += c;
    std::vector<double> props(row.size(), 0.0);
    for (std::size_t k = 0; k < row.size(); ++k) {
      props[k] = static_cast<double>(row[k]) / total;
    }
    rows[year] = std::move(props);
  }
  return rows;
}

std::string heatmap_csv(
    const std::map<std::string, std::map<int, std::vector<double>>>& by_researcher,
    int num_topics) {
  std::string out = "researcher_id,year";
  for (int k = 0; k < num_topics; ++k) {
    out += ",topic_" + std::to_string(k);
  }
  out += '\n';
  for (const auto& [id, rows] : by_researcher) {
    for (const auto& [year, props] : rows) {
      out += id + "," + std::to_string(year);
      for (double p : props) {
        out += ",";
        out += format_prob(p);
      }
      out += '\n';
    }
  }
  return out;
}

std::string transition_csv(
    const std::map<std::string, std::vector<TopicAssignment>>& by_researcher,
    int num_topics) {
  std::string out =
      "researcher_id,from_year,to_year,from_topic,to_topic,probability\n";
  for (const auto& [id, assignments] : by_researcher) {
    std::map<int, std::vector<int>> topics_by_year;
    for (const TopicAssignment& a : assignments) {
      topics_by_year[a.year].push_back(a.dominant_topic);
    }
    for (auto it = topics_by_year.begin(); it != topics_by_year.end(); ++it) {
      auto next = std::next(it);
      if (next == topics_by_year.end()) break;
      std::vector<std::vector<int>> pair_counts(
          static_cast<std::size_t>(num_topics),
          std::vector<int>(static_cast<std::size_t>(num_topics), 0));
      for (int from : it->second) {
        for (int to : next->second) {
          ++pair_counts[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
        }
      }
      for (int from = 0; from < num_topics; ++from) {
        int row_total = 0;
        for (int c : pair_counts[static_cast<std::size_t>(from)]) row_total += c;
        if (row_total == 0) continue;
        for (int to = 0; to < num_topics; ++to) {
          int c = pair_counts[static_cast<std::size_t>(from)][static_cast<std::size_t>(to)];
          if (c == 0) continue;
          out += id + "," + std::to_string(it->first) + "," +
                 std::to_string(next->first) + "," + std::to_string(from) +
                 "," + std::to_string(to) + "," +
                 format_prob(static_cast<double>(c) / row_total) + "\n";
        }
      }
    }
  }
  return out;
}

std::map<int, std::vector<std::size_t>> group_docs_by_topic(
    const LdaModel& model, std::size_t num_docs) {
  if (num_docs > model.doc_topic_counts.size()) {
    throw DataError("model fitted over fewer documents than requested");
  }
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t d = 0; d < num_docs; ++d) {
    groups[dominant_topic(model, d)].push_back(d);
  }
  return groups;
}

std::string serialize_lda(const LdaModel& model) {
  json j;
  j["format_version"] = 1;
  j["num_topics"] = model.num_topics;
  j["alpha"] = model.alpha;
  j["beta"] = model.beta;
  j["seed"] = model.seed;
  j["iterations"] = model.iterations;
  j["vocabulary"] = model.vocabulary;
  j["topic_word_counts"] = model.topic_word_counts;
  j["doc_topic_counts"] = model.doc_topic_counts;
  j["topic_totals"] = model.topic_totals;
  return j.dump();
}

LdaModel parse_lda(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
    if (j.at("format_version").get<int>() != 1) {
      throw DataError("unsupported model format version");
    }
    LdaModel model;
    model.num_topics = j.at("num_topics").get<int>();
    model.alpha = j.at("alpha").get<double>();
    model.beta = j.at("beta").get<double>();
    model.seed = j.at("seed").get<std::uint64_t>();
    model.iterations = j.at("iterations").get<int>();
    model.vocabulary = j.at("vocabulary").get<std::vector<std::string>>();
    model.topic_word_counts =
        j.at("topic_word_counts").get<std::vector<std::vector<int>>>();
    model.doc_topic_counts =
        j.at("doc_topic_counts").get<std::vector<std::vector<int>>>();
    model.topic_totals = j.at("topic_totals").get<std::vector<int>>();
    return model;
  } catch (const json::exception& e) {
    throw DataError(std::string("malformed model snapshot: ") + e.what());
  }
}

void save_lda(const LdaModel& model, const std::filesystem::path& path) {
  write_file(path, serialize_lda(model));
}

LdaModel load_lda(const std::filesystem::path& path) {
  return parse_lda(read_file(path));
}

}  // namespace profkit
