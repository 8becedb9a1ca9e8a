// Copyright 2026 The Profkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "profkit/divergence.hpp"
#include "profkit/errors.hpp"
#include "profkit/mesh_vocab.hpp"
#include "profkit/text.hpp"

using namespace profkit;

namespace {

const std::string kFixtures = PROFKIT_FIXTURES_DIR;

TokenizedDoc doc_of(std::vector<std::string> tokens) {
  TokenizedDoc d;
  d.tokens = std::move(tokens);
  return d;
}

TermDistribution dist_of(std::map<std::string, double> probs) {
  TermDistribution d;
  d.probs = std::move(probs);
  return d;
}

}  // namespace

TEST_CASE("tfidf_corpus computes tf * ln(N/df) per term") {
  Stoplist stop({"the"});
  std::vector<TokenizedDoc> docs = {
      doc_of({"gene", "gene", "cell", "the"}),
      doc_of({"gene", "network"}),
      doc_of({"cell", "graph", "cell"}),
  };
  std::vector<TfIdfVector> vecs = tfidf_corpus(docs, stop);
  REQUIRE(vecs.size() == 3);

  const double ln_3_2 = std::log(3.0 / 2.0);
  const double ln_3 = std::log(3.0);
  CHECK(vecs[0].weights.at("gene") == doctest::Approx(2.0 * ln_3_2));
  CHECK(vecs[0].weights.at("cell") == doctest::Approx(ln_3_2));
  CHECK(vecs[0].weights.size() == 2);  // "the" filtered
  CHECK(vecs[0].doc_length == 4);      // raw length includes the stopword
  CHECK(vecs[0].term_counts.at("gene") == 2);
  CHECK(vecs[1].weights.at("network") == doctest::Approx(ln_3));
  CHECK(vecs[2].weights.at("cell") == doctest::Approx(2.0 * ln_3_2));
  CHECK(vecs[2].weights.at("graph") == doctest::Approx(ln_3));

  CHECK_THROWS_AS(tfidf_corpus({docs[0]}, stop), DataError);
}

TEST_CASE("a term in every document carries zero weight") {
  Stoplist stop;
  std::vector<TokenizedDoc> docs = {
      doc_of({"shared", "shared", "extra"}),
      doc_of({"shared", "other"}),
  };
  std::vector<TfIdfVector> vecs = tfidf_corpus(docs, stop);
  CHECK(vecs[0].weights.at("shared") == doctest::Approx(0.0));
  CHECK(vecs[0].term_counts.at("shared") == 2);  // still counted
}

TEST_CASE("to_distribution smooths over the support and normalizes") {
  TfIdfVector vec;
  vec.weights = {{"a", 3.0}, {"b", 1.0}};
  std::set<std::string> support = {"a", "b", "c"};
  TermDistribution dist = to_distribution(vec, support, 0.5);
  // Masses 3.5, 1.5, 0.5 over total 5.5.
  CHECK(dist.probs.at("a") == doctest::Approx(3.5 / 5.5));
  CHECK(dist.probs.at("b") == doctest::Approx(1.5 / 5.5));
  CHECK(dist.probs.at("c") == doctest::Approx(0.5 / 5.5));
  double total = 0.0;
  for (const auto& [term, p] : dist.probs) {
    CHECK(p > 0.0);
    total += p;
  }
  CHECK(total == doctest::Approx(1.0));
  CHECK_THROWS_AS(to_distribution(vec, {}, 0.5), DataError);
}

TEST_CASE("kl_divergence hand case: (0.9,0.1) against (0.1,0.9)") {
  TermDistribution p = dist_of({{"x", 0.9}, {"y", 0.1}});
  TermDistribution q = dist_of({{"x", 0.1}, {"y", 0.9}});
  // 0.9 ln 9 + 0.1 ln (1/9) = 0.8 ln 9
  CHECK(std::abs(kl_divergence(p, q) - 1.7577796618689758) < 1e-6);
  CHECK(std::abs(kl_divergence(p, q) - 0.8 * std::log(9.0)) < 1e-12);
  // Asymmetric by construction, symmetric inputs here give the same value.
  CHECK(kl_divergence(q, p) == doctest::Approx(kl_divergence(p, q)));

  CHECK_THROWS_AS(kl_divergence(p, dist_of({{"x", 1.0}})), DataError);
  CHECK_THROWS_AS(kl_divergence(p, dist_of({{"x", 0.5}, {"z", 0.5}})),
                  DataError);
}

TEST_CASE("kl_divergence is non-negative and zero on identical inputs") {
  std::mt19937 rng(20260814);
  std::uniform_real_distribution<double> uniform(0.01, 1.0);
  std::uniform_int_distribution<int> support_size(2, 20);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = support_size(rng);
    std::map<std::string, double> p_raw;
    std::map<std::string, double> q_raw;
    double p_total = 0.0;
    double q_total = 0.0;
    for (int i = 0; i < n; ++i) {
      std::string term = "t" + std::to_string(i);
      p_raw[term] = uniform(rng);
      q_raw[term] = uniform(rng);
      p_total += p_raw[term];
      q_total += q_raw[term];
    }
    for (auto& [t, v] : p_raw) v /= p_total;
    for (auto& [t, v] : q_raw) v /= q_total;
    TermDistribution p = dist_of(p_raw);
    TermDistribution q = dist_of(q_raw);
    REQUIRE(kl_divergence(p, q) >= -1e-9);
    REQUIRE(std::abs(kl_divergence(p, p)) <= 1e-9);
  }
}

TEST_CASE("kl_between_docs uses the union support") {
  TfIdfVector a;
  a.weights = {{"x", 0.9}, {"y", 0.1}};
  TfIdfVector b;
  b.weights = {{"x", 0.1}, {"y", 0.9}};
  CHECK(std::abs(kl_between_docs(a, b) - 1.7577796618689758) < 1e-6);

  // Disjoint vocabularies still work: the union support covers both sides.
  TfIdfVector c;
  c.weights = {{"only", 1.0}};
  CHECK(kl_between_docs(a, c) > 0.0);

  TfIdfVector empty;
  CHECK(kl_between_docs(empty, empty) == 0.0);
}

TEST_CASE("parse_kl_direction accepts the two documented spellings") {
  CHECK(parse_kl_direction("machine-vs-human") == KlDirection::MachineVsHuman);
  CHECK(parse_kl_direction("human-vs-machine") == KlDirection::HumanVsMachine);
  CHECK_THROWS_AS(parse_kl_direction("sideways"), ConfigError);
}

TEST_CASE("unique_terms wants positive weight in a and absence from b") {
  TfIdfVector a;
  a.weights = {{"alpha", 1.2}, {"beta", 0.0}, {"gamma", 0.5}};
  a.term_counts = {{"alpha", 1}, {"beta", 1}, {"gamma", 1}};
  TfIdfVector b;
  b.term_counts = {{"gamma", 2}, {"delta", 1}};
  std::set<std::string> unique = unique_terms(a, b);
  CHECK(unique == std::set<std::string>{"alpha"});
}

TEST_CASE("mesh_novelty matches descriptors and re-joined phrases") {
  MeshVocabulary vocab = MeshVocabulary::load(kFixtures + "/mesh/vocab.txt");
  REQUIRE(vocab.contains("genomics"));
  REQUIRE(vocab.contains("Wound Healing"));
  REQUIRE_FALSE(vocab.contains("quantum chromodynamics"));

  std::set<std::string> unique = {"wound", "healing", "genomics", "quantum",
                                  "chromodynamics"};
  std::vector<std::string> tokens = {"wound", "healing", "genomics", "quantum",
                                     "chromodynamics"};
  std::vector<std::string> hits = mesh_novelty(unique, tokens, vocab);
  CHECK(hits == std::vector<std::string>{"genomics", "wound healing"});

  // Adjacency matters: the same words separated by a non-unique token no
  // longer form the phrase.
  std::vector<std::string> separated = {"wound", "care", "healing"};
  CHECK(mesh_novelty({"wound", "healing"}, separated, vocab).empty());

  // Three-token descriptors come from the width-3 window.
  std::set<std::string> ehr = {"electronic", "health", "records"};
  std::vector<std::string> ehr_tokens = {"electronic", "health", "records"};
  CHECK(mesh_novelty(ehr, ehr_tokens, vocab) ==
        std::vector<std::string>{"electronic health records"});
}

TEST_CASE("MeshVocabulary loads descriptor XML and the text fallback") {
  MeshVocabulary from_xml =
      MeshVocabulary::load(kFixtures + "/mesh/descriptors.xml");
  CHECK(from_xml.size() == 6);
  CHECK(from_xml.contains("Machine Learning"));
  CHECK(from_xml.contains("machine learning"));  // case-insensitive
  CHECK_FALSE(from_xml.tree_numbers("Machine Learning").empty());
  CHECK(from_xml.tree_numbers("not a descriptor").empty());

  MeshVocabulary from_text = MeshVocabulary::from_text(
      "# comment\nMachine Learning\tL01.224.050.375\n\nPhenotype\n");
  CHECK(from_text.size() == 2);
  CHECK(from_text.contains("MACHINE LEARNING"));
  CHECK(from_text.tree_numbers("machine learning") ==
        std::vector<std::string>{"L01.224.050.375"});
  CHECK(from_text.contains("phenotype"));
  CHECK(from_text.tree_numbers("phenotype").empty());

  CHECK_THROWS_AS(MeshVocabulary::from_text("# only comments\n"), DataError);
  CHECK_THROWS_AS(MeshVocabulary::from_xml("<DescriptorRecordSet/>"),
                  DataError);
}
