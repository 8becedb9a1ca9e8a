// Copyright 2026 The Profkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "profkit/lda.hpp"

namespace {

std::vector<profkit::TokenizedDoc> synthetic_corpus(std::size_t docs,
                                                    std::size_t words_per_doc) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> pick(0, 199);
  std::vector<profkit::TokenizedDoc> corpus(docs);
  for (auto& doc : corpus) {
    doc.tokens.reserve(words_per_doc);
    for (std::size_t i = 0; i < words_per_doc; ++i) {
      doc.tokens.push_back("w" + std::to_string(pick(rng)));
    }
  }
  return corpus;
}

void BM_gibbs_sweeps(benchmark::State& state) {
  auto corpus = synthetic_corpus(50, 80);
  profkit::LdaParams params;
  params.num_topics = 10;
  params.iterations = static_cast<int>(state.range(0));
  params.seed = 42;
  for (auto _ : state) {
    benchmark::DoNotOptimize(profkit::fit_lda(corpus, params));
  }
}

}  // namespace

BENCHMARK(BM_gibbs_sweeps)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);
