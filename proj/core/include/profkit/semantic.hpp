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

#ifndef PROFKIT_SEMANTIC_HPP
#define PROFKIT_SEMANTIC_HPP

#include <filesystem>
#include <string>
#include <vector>

namespace profkit {

struct TokenEmbeddings {
  std::vector<std::string> tokens;
  std::vector<std::vector<double>> vectors;  // one per token, equal dimension
};

struct SemanticScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// precision = mean_i max_j cos(c_i, r_j); recall symmetric; f1 harmonic.
// Throws DataError on empty sides or mismatched dimensions.
SemanticScores greedy_match_score(const TokenEmbeddings& candidate,
                                  const TokenEmbeddings& reference);

// JSON {"dim": int, "tokens": [...], "vectors": [[...]]}. Tokens named in
// drop_markers (sequence delimiters like [CLS]) are removed with their
// vectors. Validates shape, dimension and finiteness.
TokenEmbeddings load_embeddings(
    const std::filesystem::path& path,
    const std::vector<std::string>& drop_markers = {"[CLS]", "[SEP]", "<s>",
                                                    "</s>"});

TokenEmbeddings parse_embeddings(
    std::string_view json_text,
    const std::vector<std::string>& drop_markers = {"[CLS]", "[SEP]", "<s>",
                                                    "</s>"});

// POST {"text": ...} to an embedding endpoint returning the same JSON shape.
TokenEmbeddings fetch_embeddings(const std::string& endpoint,
                                 const std::string& text);

}  // namespace profkit

#endif  // PROFKIT_SEMANTIC_HPP
