// Copyright 2026 The Profkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "profkit/lexical.hpp"

namespace {

std::vector<std::string> synthetic_tokens(std::size_t n, std::uint32_t seed) {
  static const char* pool[] = {"the",     "model",   "predicts", "patient",
                               "risk",    "from",    "clinical", "records",
                               "using",   "machine", "learning", "methods",
                               "genomic", "data",    "analysis", "disease"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, 15);
  std::vector<std::string> tokens;
  tokens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) tokens.push_back(pool[pick(rng)]);
  return tokens;
}

void BM_rouge_l(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto candidate = synthetic_tokens(n, 1);
  auto reference = synthetic_tokens(n, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(profkit::rouge_l(candidate, reference));
  }
}

void BM_bleu(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto candidate = synthetic_tokens(n, 3);
  auto reference = synthetic_tokens(n, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(profkit::bleu(candidate, reference));
  }
}

void BM_meteor(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto candidate = synthetic_tokens(n, 5);
  auto reference = synthetic_tokens(n, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(profkit::meteor(candidate, reference));
  }
}

}  // namespace

BENCHMARK(BM_rouge_l)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_bleu)->Arg(64)->Arg(256)->Arg(1024);
BENCHMARK(BM_meteor)->Arg(64)->Arg(256);
