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

#ifndef PROFKIT_LEXICAL_HPP
#define PROFKIT_LEXICAL_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace profkit {

struct RougeScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct LexicalScores {
  RougeScores rouge_l;
  double bleu = 0.0;
  double meteor = 0.0;
};

using Tokens = std::vector<std::string>;

// LCS-based: precision = L/|candidate|, recall = L/|reference|. Either side
// empty gives all zeros.
RougeScores rouge_l(const Tokens& candidate, const Tokens& reference);

// Geometric mean of clipped n-gram precisions, n = 1..max_n, times the
// brevity penalty. Unigram precision is never smoothed; higher orders with
// zero matches use (m+1)/(t+1) so short single-reference texts do not
// collapse to 0.
double bleu(const Tokens& candidate, const Tokens& reference, int max_n = 4);

// Flat word -> synset-id table; two words are synonym-stage matches when they
// share a synset id. File format: word<TAB>synset_id per line.
class SynonymTable {
 public:
  SynonymTable() = default;
  static SynonymTable load(const std::filesystem::path& path);

  void add(std::string word, std::string synset_id);
  // Empty string when the word has no entry.
  std::string_view synset_of(std::string_view word) const;
  bool empty() const { return table_.empty(); }

 private:
  std::unordered_map<std::string, std::string> table_;
};

// Staged unigram alignment (exact, then stem, then synonym), each token used
// at most once, then F_mean = 10PR/(R+9P) discounted by the fragmentation
// penalty 0.5*(chunks/m)^3. Among maximal alignments the chunk count is
// minimized (canonical rule); see meteor_alignment for the matcher.
double meteor(const Tokens& candidate, const Tokens& reference,
              const SynonymTable& synonyms = SynonymTable());

struct MeteorAlignment {
  // pairs[i] = (candidate index, reference index), sorted by candidate index.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::size_t chunks = 0;
};

// Exposed for oracle tests: maximal-size alignment with minimal chunk count.
MeteorAlignment meteor_alignment(const Tokens& candidate, const Tokens& reference,
                                 const SynonymTable& synonyms);

LexicalScores lexical_scores(const Tokens& candidate, const Tokens& reference,
                             const SynonymTable& synonyms = SynonymTable());

}  // namespace profkit

#endif  // PROFKIT_LEXICAL_HPP
