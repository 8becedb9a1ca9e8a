// Copyright 2026 The Profkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "profkit/text.hpp"

namespace {

std::string synthetic_text(std::size_t words, std::uint32_t seed) {
  static const char* pool[] = {"gene",    "expression", "clinical", "trial",
                               "protein", "networks",   "analysis", "patient",
                               "outcome", "modeling"};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, 9);
  std::string text;
  for (std::size_t i = 0; i < words; ++i) {
    if (i) text += (i % 12 == 0) ? ". " : " ";
    text += pool[pick(rng)];
  }
  return text;
}

void BM_tokenize(benchmark::State& state) {
  std::string text = synthetic_text(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(profkit::tokenize(text));
  }
  state.SetBytesProcessed(static_cast<int64_t>(state.iterations()) *
                          static_cast<int64_t>(text.size()));
}

void BM_stem(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(profkit::stem("relational"));
    benchmark::DoNotOptimize(profkit::stem("conditionally"));
    benchmark::DoNotOptimize(profkit::stem("happiness"));
  }
}

}  // namespace

BENCHMARK(BM_tokenize)->Arg(100)->Arg(1000)->Arg(10000);
BENCHMARK(BM_stem);
