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

#ifndef PROFKIT_LDA_HPP
#define PROFKIT_LDA_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "profkit/corpus.hpp"

namespace profkit {

struct LdaParams {
  int num_topics = 30;
  // alpha <= 0 means "use 50/K".
  double alpha = -1.0;
  double beta = 0.01;
  int iterations = 500;
  std::uint64_t seed = 0;
};

struct LdaModel {
  int num_topics = 0;
  double alpha = 0.0;
  double beta = 0.0;
  std::uint64_t seed = 0;
  int iterations = 0;
  std::vector<std::string> vocabulary;
  // topic_word_counts[k][w], doc_topic_counts[d][k], topic_totals[k].
  std::vector<std::vector<int>> topic_word_counts;
  std::vector<std::vector<int>> doc_topic_counts;
  std::vector<int> topic_totals;

  bool operator==(const LdaModel&) const = default;
};

// Collapsed Gibbs sampling. State after `iterations` full sweeps is fully
// determined by (docs, params); rerunning with identical inputs gives a
// bit-identical model. Documents that are empty after tokenization simply
// contribute nothing (their count row is all zeros).
LdaModel fit_lda(const std::vector<TokenizedDoc>& docs, const LdaParams& params);

// argmax_k (doc_topic_counts[d][k] + alpha), ties to the lowest index.
int dominant_topic(const LdaModel& model, std::size_t doc_index);

struct TopicAssignment {
  std::string researcher_id;
  std::string pmid;
  int year = 0;
  int dominant_topic = 0;
};

// |unique dominant topics| / |assignments|. Throws DataError on empty input.
double diversity_score(const std::vector<TopicAssignment>& assignments);

enum class DiversityBand { Stable, Middle, Evolving };

// < 0.3 stable, > 0.7 evolving, otherwise middle.
DiversityBand diversity_band(double score);
std::string_view diversity_band_name(DiversityBand band);

// Rows keyed by year; each row holds per-topic proportions of that year's
// assignments and sums to 1 (years with no assignments are absent).
std::map<int, std::vector<double>> year_heatmap(
    const std::vector<TopicAssignment>& assignments, int num_topics);

// CSV export: header researcher_id,year,topic_0..topic_{K-1}; one row per
// (researcher, year) in (id, year) order.
std::string heatmap_csv(
    const std::map<std::string, std::map<int, std::vector<double>>>& by_researcher,
    int num_topics);

// Year-over-year transition export, the alternate reading of the heatmap:
// for each researcher and each consecutive pair of publication years, every
// (topic in from-year, topic in to-year) publication pairing is counted and
// rows are normalized per from-topic. Header:
// researcher_id,from_year,to_year,from_topic,to_topic,probability.
std::string transition_csv(
    const std::map<std::string, std::vector<TopicAssignment>>& by_researcher,
    int num_topics);

std::map<int, std::vector<std::size_t>> group_docs_by_topic(
    const LdaModel& model, std::size_t num_docs);

// Versioned JSON snapshot (counts as integer arrays) for reproducibility.
std::string serialize_lda(const LdaModel& model);
LdaModel parse_lda(std::string_view json_text);
void save_lda(const LdaModel& model, const std::filesystem::path& path);
LdaModel load_lda(const std::filesystem::path& path);

}  // namespace profkit

#endif  // PROFKIT_LDA_HPP
