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

#ifndef PROFKIT_SYNTACTIC_HPP
#define PROFKIT_SYNTACTIC_HPP

#include <map>
#include <string>
#include <vector>

#include "profkit/conllu.hpp"

namespace profkit {

// One document = the sentences of one parsed profile.
using ParsedDoc = std::vector<ParsedSentence>;

struct SyntacticReport {
  std::map<std::string, double> pos_distribution;  // upos -> percent of tokens
  double max_dep_depth = 0.0;       // per-doc maxima averaged over docs
  double syntactic_complexity = 0.0;
  double syntactic_ambiguity = 0.0;
  std::map<std::string, int> lexical_diversity;  // upos -> distinct lemmas
};

// Percentages over all tokens of all docs; sums to 100 for non-empty input.
std::map<std::string, double> pos_distribution(const std::vector<ParsedDoc>& docs);

// Depth counts nodes: a root alone is 1.
int max_dep_depth(const ParsedSentence& sentence);

// Mean over all tokens of (node-to-root edge count + 1), docs averaged with
// equal weight.
double syntactic_complexity(const std::vector<ParsedDoc>& docs);

// Attachment-ambiguity heuristic: for each adposition-introduced or
// participial modifier phrase, candidate attachment heads are the nouns and
// verbs preceding the phrase in the sentence; a phrase with >= 2 candidates
// counts as ambiguous. Returns the mean token length of ambiguous phrases
// (0 when there are none).
double syntactic_ambiguity(const std::vector<ParsedDoc>& docs);

// Phrase spans found by the ambiguity heuristic, for inspection in tests.
struct AmbiguousPhrase {
  std::size_t sentence_index = 0;
  std::size_t start = 0;   // 0-based token index of the phrase start
  std::size_t length = 0;  // tokens in the phrase subtree
  std::size_t candidate_heads = 0;
};
std::vector<AmbiguousPhrase> find_ambiguous_phrases(const ParsedDoc& doc);

// Distinct lowercase lemmas per upos tag.
std::map<std::string, int> lexical_diversity(const std::vector<ParsedDoc>& docs);

SyntacticReport syntactic_report(const std::vector<ParsedDoc>& docs);

}  // namespace profkit

#endif  // PROFKIT_SYNTACTIC_HPP
