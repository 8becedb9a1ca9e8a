// Copyright 2026 The Profkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "profkit/errors.hpp"
#include "profkit/lda.hpp"

using namespace profkit;

namespace {

TokenizedDoc doc_of(std::vector<std::string> tokens) {
  TokenizedDoc d;
  d.tokens = std::move(tokens);
  return d;
}

// Three groups with disjoint vocabularies; group g draws from words g0..g7.
std::vector<TokenizedDoc> three_group_corpus(int docs_per_group,
                                             int tokens_per_doc) {
  const char* prefixes[3] = {"alpha", "beta", "gamma"};
  std::mt19937_64 rng(7);
  std::vector<TokenizedDoc> docs;
  for (int group = 0; group < 3; ++group) {
    for (int d = 0; d < docs_per_group; ++d) {
      TokenizedDoc doc;
      for (int t = 0; t < tokens_per_doc; ++t) {
        doc.tokens.push_back(std::string(prefixes[group]) +
                             std::to_string(rng() % 8));
      }
      docs.push_back(std::move(doc));
    }
  }
  return docs;
}

std::vector<TokenizedDoc> small_corpus() {
  return {
      doc_of({"gene", "protein", "gene", "cell"}),
      doc_of({"network", "graph", "network"}),
      doc_of({"gene", "cell", "protein"}),
  };
}

}  // namespace

TEST_CASE("fit_lda is deterministic for a fixed seed") {
  std::vector<TokenizedDoc> docs = three_group_corpus(4, 20);
  LdaParams params;
  params.num_topics = 3;
  params.iterations = 50;
  params.seed = 42;

  LdaModel a = fit_lda(docs, params);
  LdaModel b = fit_lda(docs, params);
  CHECK(a == b);
  CHECK(serialize_lda(a) == serialize_lda(b));

  params.seed = 43;
  LdaModel c = fit_lda(docs, params);
  CHECK(a.doc_topic_counts != c.doc_topic_counts);
}

TEST_CASE("fit_lda conserves token counts everywhere") {
  std::vector<TokenizedDoc> docs = three_group_corpus(5, 17);
  docs.insert(docs.begin() + 2, doc_of({}));  // empty doc contributes nothing
  LdaParams params;
  params.num_topics = 4;
  params.iterations = 30;
  params.seed = 9;
  LdaModel model = fit_lda(docs, params);

  std::size_t total_tokens = 0;
  std::map<std::string, int> corpus_freq;
  for (const TokenizedDoc& d : docs) {
    total_tokens += d.tokens.size();
    for (const std::string& t : d.tokens) ++corpus_freq[t];
  }

  // Per document: topic counts sum to document length.
  REQUIRE(model.doc_topic_counts.size() == docs.size());
  for (std::size_t d = 0; d < docs.size(); ++d) {
    int row_sum = 0;
    for (int c : model.doc_topic_counts[d]) row_sum += c;
    CHECK(row_sum == static_cast<int>(docs[d].tokens.size()));
  }
  // The empty document's row is all zeros.
  for (int c : model.doc_topic_counts[2]) CHECK(c == 0);

  // Per topic: word counts sum to the topic total.
  int grand_total = 0;
  for (int k = 0; k < model.num_topics; ++k) {
    int word_sum = 0;
    for (int c : model.topic_word_counts[static_cast<std::size_t>(k)]) {
      word_sum += c;
    }
    CHECK(word_sum == model.topic_totals[static_cast<std::size_t>(k)]);
    grand_total += word_sum;
  }
  CHECK(grand_total == static_cast<int>(total_tokens));

  // Per word: counts across topics sum to the corpus frequency.
  for (std::size_t w = 0; w < model.vocabulary.size(); ++w) {
    int col_sum = 0;
    for (int k = 0; k < model.num_topics; ++k) {
      col_sum += model.topic_word_counts[static_cast<std::size_t>(k)][w];
    }
    CHECK(col_sum == corpus_freq.at(model.vocabulary[w]));
  }
}

TEST_CASE("fit_lda separates disjoint vocabularies") {
  const int docs_per_group = 10;
  std::vector<TokenizedDoc> docs = three_group_corpus(docs_per_group, 40);
  LdaParams params;
  params.num_topics = 3;
  params.alpha = 0.5;
  params.iterations = 200;
  params.seed = 20260814;
  LdaModel model = fit_lda(docs, params);

  auto groups = group_docs_by_topic(model, docs.size());
  int majority_sum = 0;
  for (const auto& [topic, members] : groups) {
    int label_counts[3] = {0, 0, 0};
    for (std::size_t d : members) {
      ++label_counts[d / docs_per_group];  // true group from construction
    }
    majority_sum += *std::max_element(label_counts, label_counts + 3);
  }
  double purity = static_cast<double>(majority_sum) /
                  static_cast<double>(docs.size());
  CHECK(purity >= 0.8);
}

TEST_CASE("fit_lda validates its inputs") {
  std::vector<TokenizedDoc> docs = small_corpus();
  LdaParams params;
  params.num_topics = 1;
  CHECK_THROWS_AS(fit_lda(docs, params), ConfigError);
  params.num_topics = 2;
  params.iterations = 0;
  CHECK_THROWS_AS(fit_lda(docs, params), ConfigError);
  params.iterations = 10;
  CHECK_THROWS_AS(fit_lda({doc_of({})}, params), DataError);
  params.num_topics = 100;
  CHECK_THROWS_AS(fit_lda(docs, params), DataError);
}

TEST_CASE("dominant_topic breaks ties toward the lowest index") {
  LdaModel model;
  model.num_topics = 3;
  model.doc_topic_counts = {{2, 2, 1}, {0, 0, 0}, {1, 5, 5}};
  CHECK(dominant_topic(model, 0) == 0);
  CHECK(dominant_topic(model, 1) == 0);
  CHECK(dominant_topic(model, 2) == 1);
  CHECK_THROWS_AS(dominant_topic(model, 3), DataError);
}

TEST_CASE("diversity_score is unique topics over assignments") {
  auto assignment = [](int topic) {
    TopicAssignment a;
    a.dominant_topic = topic;
    return a;
  };
  CHECK(diversity_score({assignment(4), assignment(4), assignment(4),
                         assignment(4)}) == doctest::Approx(0.25));
  CHECK(diversity_score({assignment(0), assignment(1), assignment(2),
                         assignment(3)}) == doctest::Approx(1.0));
  CHECK(diversity_score({assignment(1), assignment(1), assignment(2),
                         assignment(2)}) == doctest::Approx(0.5));
  CHECK(diversity_score({assignment(9)}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(diversity_score({}), DataError);
}

TEST_CASE("diversity bands use 0.3 and 0.7 as exclusive cutoffs") {
  CHECK(diversity_band(0.0) == DiversityBand::Stable);
  CHECK(diversity_band(0.29) == DiversityBand::Stable);
  CHECK(diversity_band(0.3) == DiversityBand::Middle);
  CHECK(diversity_band(0.5) == DiversityBand::Middle);
  CHECK(diversity_band(0.7) == DiversityBand::Middle);
  CHECK(diversity_band(0.71) == DiversityBand::Evolving);
  CHECK(diversity_band(1.0) == DiversityBand::Evolving);
  CHECK(diversity_band_name(DiversityBand::Stable) == "stable");
  CHECK(diversity_band_name(DiversityBand::Middle) == "middle");
  CHECK(diversity_band_name(DiversityBand::Evolving) == "evolving");
}

namespace {

TopicAssignment assign(int year, int topic) {
  TopicAssignment a;
  a.year = year;
  a.dominant_topic = topic;
  return a;
}

}  // namespace

TEST_CASE("year_heatmap normalizes per year") {
  std::vector<TopicAssignment> assignments = {
      assign(2019, 0), assign(2019, 1), assign(2019, 0), assign(2021, 2)};
  auto rows = year_heatmap(assignments, 3);
  REQUIRE(rows.size() == 2);  // 2020 absent
  CHECK(rows.at(2019)[0] == doctest::Approx(2.0 / 3.0));
  CHECK(rows.at(2019)[1] == doctest::Approx(1.0 / 3.0));
  CHECK(rows.at(2019)[2] == doctest::Approx(0.0));
  CHECK(rows.at(2021)[2] == doctest::Approx(1.0));
  CHECK_THROWS_AS(year_heatmap({assign(2019, 3)}, 3), DataError);
}

TEST_CASE("heatmap_csv emits one row per researcher-year in order") {
  std::map<std::string, std::map<int, std::vector<double>>> by_researcher;
  by_researcher["r2"][2020] = {1.0, 0.0};
  by_researcher["r1"][2021] = {0.25, 0.75};
  by_researcher["r1"][2019] = {2.0 / 3.0, 1.0 / 3.0};
  CHECK(heatmap_csv(by_researcher, 2) ==
        "researcher_id,year,topic_0,topic_1\n"
        "r1,2019,0.666667,0.333333\n"
        "r1,2021,0.250000,0.750000\n"
        "r2,2020,1.000000,0.000000\n");
}

TEST_CASE("transition_csv pairs consecutive publication years") {
  std::map<std::string, std::vector<TopicAssignment>> by_researcher;
  // Present years 2019 and 2021 are consecutive for this researcher even
  // though 2020 is missing.
  by_researcher["r1"] = {assign(2019, 0), assign(2019, 0), assign(2019, 1),
                         assign(2021, 1)};
  CHECK(transition_csv(by_researcher, 2) ==
        "researcher_id,from_year,to_year,from_topic,to_topic,probability\n"
        "r1,2019,2021,0,1,1.000000\n"
        "r1,2019,2021,1,1,1.000000\n");

  // Three years chain two transitions; per-from-topic rows sum to 1.
  by_researcher["r1"].push_back(assign(2022, 0));
  by_researcher["r1"].push_back(assign(2022, 1));
  std::string csv = transition_csv(by_researcher, 2);
  CHECK(csv ==
        "researcher_id,from_year,to_year,from_topic,to_topic,probability\n"
        "r1,2019,2021,0,1,1.000000\n"
        "r1,2019,2021,1,1,1.000000\n"
        "r1,2021,2022,1,0,0.500000\n"
        "r1,2021,2022,1,1,0.500000\n");

  CHECK(transition_csv({{"solo", {assign(2019, 0)}}}, 2) ==
        "researcher_id,from_year,to_year,from_topic,to_topic,probability\n");
}

TEST_CASE("group_docs_by_topic buckets documents by dominant topic") {
  LdaModel model;
  model.num_topics = 2;
  model.doc_topic_counts = {{3, 1}, {0, 2}, {5, 0}};
  auto groups = group_docs_by_topic(model, 3);
  REQUIRE(groups.size() == 2);
  CHECK(groups.at(0) == std::vector<std::size_t>{0, 2});
  CHECK(groups.at(1) == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(group_docs_by_topic(model, 4), DataError);
}

TEST_CASE("model snapshots round-trip through JSON and disk") {
  LdaParams params;
  params.num_topics = 2;
  params.iterations = 15;
  params.seed = 5;
  LdaModel model = fit_lda(small_corpus(), params);

  LdaModel reparsed = parse_lda(serialize_lda(model));
  CHECK(reparsed == model);

  CHECK_THROWS_AS(parse_lda("not json"), DataError);
  CHECK_THROWS_AS(parse_lda("{}"), DataError);
  CHECK_THROWS_AS(parse_lda(R"({"format_version":2})"), DataError);

  std::filesystem::path path =
      std::filesystem::temp_directory_path() / "profkit_lda_test.json";
  save_lda(model, path);
  CHECK(load_lda(path) == model);
  std::filesystem::remove(path);
}
