// Copyright 2026 The Profkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "profkit/errors.hpp"
#include "profkit/semantic.hpp"

using namespace profkit;

namespace {

const std::string kFixtures = PROFKIT_FIXTURES_DIR;

TokenEmbeddings embeddings_of(std::vector<std::vector<double>> vectors) {
  TokenEmbeddings e;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    e.tokens.push_back("t" + std::to_string(i));
  }
  e.vectors = std::move(vectors);
  return e;
}

}  // namespace

TEST_CASE("greedy match: identical embeddings score (1,1,1)") {
  TokenEmbeddings e = embeddings_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  SemanticScores s = greedy_match_score(e, e);
  CHECK(s.precision == doctest::Approx(1.0));
  CHECK(s.recall == doctest::Approx(1.0));
  CHECK(s.f1 == doctest::Approx(1.0));
}

TEST_CASE("greedy match: orthogonal embeddings score (0,0,0)") {
  TokenEmbeddings candidate = embeddings_of({{1, 0, 0, 0}, {0, 1, 0, 0}});
  TokenEmbeddings reference = embeddings_of({{0, 0, 1, 0}, {0, 0, 0, 1}});
  SemanticScores s = greedy_match_score(candidate, reference);
  CHECK(s.precision == doctest::Approx(0.0));
  CHECK(s.recall == doctest::Approx(0.0));
  CHECK(s.f1 == doctest::Approx(0.0));  // guarded harmonic mean
}

TEST_CASE("greedy match: two-by-two hand case scores 0.9 across the board") {
  const double rest = std::sqrt(0.19);  // makes the reference vectors unit
  TokenEmbeddings candidate = embeddings_of({{1, 0}, {0, 1}});
  TokenEmbeddings reference = embeddings_of({{0.9, rest}, {rest, 0.9}});
  SemanticScores s = greedy_match_score(candidate, reference);
  CHECK(std::abs(s.precision - 0.9) < 1e-12);
  CHECK(std::abs(s.recall - 0.9) < 1e-12);
  CHECK(std::abs(s.f1 - 0.9) < 1e-12);
}

TEST_CASE("greedy match: zero vectors contribute zero similarity") {
  TokenEmbeddings candidate = embeddings_of({{0, 0}, {1, 0}});
  TokenEmbeddings reference = embeddings_of({{1, 0}});
  SemanticScores s = greedy_match_score(candidate, reference);
  CHECK(s.precision == doctest::Approx(0.5));
  CHECK(s.recall == doctest::Approx(1.0));
}

TEST_CASE("greedy match validates inputs") {
  TokenEmbeddings ok = embeddings_of({{1, 0}});
  TokenEmbeddings empty;
  CHECK_THROWS_AS(greedy_match_score(empty, ok), DataError);
  CHECK_THROWS_AS(greedy_match_score(ok, empty), DataError);
  TokenEmbeddings other_dim = embeddings_of({{1, 0, 0}});
  CHECK_THROWS_AS(greedy_match_score(ok, other_dim), DataError);
}

TEST_CASE("greedy match is scale- and permutation-invariant") {
  std::mt19937 rng(20260814);
  std::uniform_int_distribution<std::size_t> count_dist(1, 6);
  std::uniform_int_distribution<std::size_t> dim_dist(2, 8);
  std::uniform_real_distribution<double> magnitude(0.1, 1.0);
  std::uniform_real_distribution<double> scale_dist(0.1, 10.0);

  auto random_embeddings = [&](std::size_t count, std::size_t dim) {
    std::vector<std::vector<double>> vectors(count, std::vector<double>(dim));
    for (auto& v : vectors) {
      for (double& x : v) {
        x = magnitude(rng) * (rng() % 2 == 0 ? 1.0 : -1.0);
      }
    }
    return embeddings_of(std::move(vectors));
  };

  for (int trial = 0; trial < 500; ++trial) {
    std::size_t dim = dim_dist(rng);
    TokenEmbeddings candidate = random_embeddings(count_dist(rng), dim);
    TokenEmbeddings reference = random_embeddings(count_dist(rng), dim);
    SemanticScores base = greedy_match_score(candidate, reference);

    TokenEmbeddings scaled_c = candidate;
    TokenEmbeddings scaled_r = reference;
    for (auto& v : scaled_c.vectors) {
      double s = scale_dist(rng);
      for (double& x : v) x *= s;
    }
    for (auto& v : scaled_r.vectors) {
      double s = scale_dist(rng);
      for (double& x : v) x *= s;
    }
    SemanticScores scaled = greedy_match_score(scaled_c, scaled_r);
    REQUIRE(std::abs(scaled.precision - base.precision) < 1e-9);
    REQUIRE(std::abs(scaled.recall - base.recall) < 1e-9);
    REQUIRE(std::abs(scaled.f1 - base.f1) < 1e-9);

    TokenEmbeddings shuffled_c = candidate;
    TokenEmbeddings shuffled_r = reference;
    std::shuffle(shuffled_c.vectors.begin(), shuffled_c.vectors.end(), rng);
    std::shuffle(shuffled_r.vectors.begin(), shuffled_r.vectors.end(), rng);
    SemanticScores shuffled = greedy_match_score(shuffled_c, shuffled_r);
    REQUIRE(std::abs(shuffled.precision - base.precision) < 1e-9);
    REQUIRE(std::abs(shuffled.recall - base.recall) < 1e-9);
    REQUIRE(std::abs(shuffled.f1 - base.f1) < 1e-9);
  }
}

TEST_CASE("parse_embeddings validates shape and drops marker tokens") {
  TokenEmbeddings e = parse_embeddings(
      R"({"dim":2,"tokens":["[CLS]","a","[SEP]"],"vectors":[[9,9],[1,0],[8,8]]})");
  CHECK(e.tokens == std::vector<std::string>{"a"});
  REQUIRE(e.vectors.size() == 1);
  CHECK(e.vectors[0] == std::vector<double>{1, 0});

  // dim is inferred from the first vector when absent.
  TokenEmbeddings inferred = parse_embeddings(
      R"({"tokens":["a","b"],"vectors":[[1,0,0],[0,1,0]]})");
  CHECK(inferred.vectors[0].size() == 3);

  CHECK_THROWS_AS(parse_embeddings("not json"), DataError);
  CHECK_THROWS_AS(parse_embeddings(R"({"tokens":["a"]})"), DataError);
  CHECK_THROWS_AS(
      parse_embeddings(R"({"dim":2,"tokens":["a"],"vectors":[[1,0],[0,1]]})"),
      DataError);
  CHECK_THROWS_AS(
      parse_embeddings(R"({"dim":2,"tokens":["a"],"vectors":[[1,0,0]]})"),
      DataError);
  CHECK_THROWS_AS(
      parse_embeddings(R"({"dim":2,"tokens":["[CLS]"],"vectors":[[1,0]]})"),
      DataError);
  CHECK_THROWS_AS(parse_embeddings(R"({"tokens":[],"vectors":[]})"), DataError);

  // Custom marker list overrides the default.
  TokenEmbeddings custom = parse_embeddings(
      R"({"dim":1,"tokens":["[CLS]","x"],"vectors":[[1],[2]]})",
      std::vector<std::string>{"x"});
  CHECK(custom.tokens == std::vector<std::string>{"[CLS]"});
}

TEST_CASE("embedding fixtures reproduce the hand-computed pair scores") {
  TokenEmbeddings human =
      load_embeddings(kFixtures + "/embeddings/r1.Human.json");
  TokenEmbeddings machine =
      load_embeddings(kFixtures + "/embeddings/r1.MeshGen.json");
  CHECK(human.tokens ==
        std::vector<std::string>{"risk", "prediction", "models"});
  CHECK(machine.tokens == std::vector<std::string>{"readmission", "likelihood"});

  SemanticScores s = greedy_match_score(machine, human);
  CHECK(std::abs(s.precision - 0.5) < 1e-12);
  CHECK(std::abs(s.recall - 0.5690355937288492) < 1e-12);
  CHECK(std::abs(s.f1 - 0.5322887255269254) < 1e-12);

  CHECK_THROWS_AS(load_embeddings(kFixtures + "/embeddings/absent.json"),
                  DataError);
}
