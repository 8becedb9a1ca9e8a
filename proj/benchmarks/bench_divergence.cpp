// Copyright 2026 The Profkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "profkit/divergence.hpp"

namespace {

profkit::TokenizedDoc synthetic_doc(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, 399);
  profkit::TokenizedDoc doc;
  doc.tokens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    doc.tokens.push_back("term" + std::to_string(pick(rng)));
  }
  return doc;
}

void BM_tfidf_and_kl(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  std::vector<profkit::TokenizedDoc> docs;
  for (std::uint32_t d = 0; d < 8; ++d) docs.push_back(synthetic_doc(n, d));
  profkit::Stoplist stoplist;
  for (auto _ : state) {
    auto vectors = profkit::tfidf_corpus(docs, stoplist);
    benchmark::DoNotOptimize(profkit::kl_between_docs(vectors[0], vectors[1]));
  }
}

}  // namespace

BENCHMARK(BM_tfidf_and_kl)->Arg(128)->Arg(512)->Arg(2048);
