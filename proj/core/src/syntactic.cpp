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

#include "profkit/syntactic.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "profkit/errors.hpp"

namespace profkit {

namespace {

// Edges from this token up to the root, plus 1 (a root alone scores 1).
int node_depth(const ParsedSentence& s, std::size_t index) {
  int depth = 1;
  std::size_t node = index + 1;  // 1-based
  while (s.tokens[node - 1].head != 0) {
    node = s.tokens[node - 1].head;
    ++depth;
  }
  return depth;
}

std::vector<std::vector<std::size_t>> children_of(const ParsedSentence& s) {
  std::vector<std::vector<std::size_t>> children(s.tokens.size());
  for (std::size_t i = 0; i < s.tokens.size(); ++i) {
    std::size_t head = s.tokens[i].head;
    if (head != 0) children[head - 1].push_back(i);
  }
  return children;
}

void collect_subtree(const std::vector<std::vector<std::size_t>>& children,
                     std::size_t root, std::vector<std::size_t>& out) {
  out.push_back(root);
  for (std::size_t c : children[root]) collect_subtree(children, c, out);
}

bool is_attachment_candidate(const ParsedToken& t) {
  return t.upos == "NOUN" || t.upos == "PROPN" || t.upos == "VERB";
}

std::string lower(const std::string& s) {
  std::string out = s;
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

std::map<std::string, double> pos_distribution(const std::vector<ParsedDoc>& docs) {
  std::map<std::string, std::size_t> counts;
  std::size_t total = 0;
  for (const ParsedDoc& doc : docs) {
    for (const ParsedSentence& s : doc) {
      for (const ParsedToken& t : s.tokens) {
        ++counts[t.upos];
        ++total;
      }
    }
  }
  if (total == 0) throw DataError("PoS distribution needs at least one token");
  std::map<std::string, double> out;
  for (const auto& [tag, count] : counts) {
    out[tag] = 100.0 * static_cast<double>(count) / static_cast<double>(total);
  }
  return out;
}

int max_dep_depth(const ParsedSentence& sentence) {
  int best = 0;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    best = std::max(best, node_depth(sentence, i));
  }
  return best;
}

double syntactic_complexity(const std::vector<ParsedDoc>& docs) {
  double doc_sum = 0.0;
  std::size_t doc_count = 0;
  for (const ParsedDoc& doc : docs) {
    double token_sum = 0.0;
    std::size_t tokens = 0;
    for (const ParsedSentence& s : doc) {
      for (std::size_t i = 0; i < s.tokens.size(); ++i) {
        token_sum += node_depth(s, i);
        ++tokens;
      }
    }
    if (tokens == 0) continue;
    doc_sum += token_sum / static_cast<double>(tokens);
    ++doc_count;
  }
  if (doc_count == 0) {
    throw DataError("syntactic complexity needs at least one token");
  }
  return doc_sum / static_cast<double>(doc_count);
}

std::vector<AmbiguousPhrase> find_ambiguous_phrases(const ParsedDoc& doc) {
  std::vector<AmbiguousPhrase> phrases;
  for (std::size_t si = 0; si < doc.size(); ++si) {
    const ParsedSentence& s = doc[si];
    auto children = children_of(s);
    for (std::size_t r = 0; r < s.tokens.size(); ++r) {
      if (r == s.root_index) continue;
      // Adposition-introduced: the subtree root has a direct ADP dependent.
      bool adpositional = false;
      for (std::size_t c : children[r]) {
        if (s.tokens[c].upos == "ADP") {
          adpositional = true;
          break;
        }
      }
      // Participial modifier: verbal clause modifying a nominal.
      bool participial =
          s.tokens[r].upos == "VERB" && s.tokens[r].deprel.starts_with("acl");
      if (!adpositional && !participial) continue;

      std::vector<std::size_t> subtree;
      collect_subtree(children, r, subtree);
      std::size_t start = *std::min_element(subtree.begin(), subtree.end());

      std::size_t candidates = 0;
      for (std::size_t i = 0; i < start; ++i) {
        if (is_attachment_candidate(s.tokens[i])) ++candidates;
      }
      if (candidates >= 2) {
        phrases.push_back({si, start, subtree.size(), candidates});
      }
    }
  }
  return phrases;
}

double syntactic_ambiguity(const std::vector<ParsedDoc>& docs) {
  std::size_t phrase_count = 0;
  std::size_t token_sum = 0;
  for (const ParsedDoc& doc : docs) {
    for (const AmbiguousPhrase& p : find_ambiguous_phrases(doc)) {
      ++phrase_count;
      token_sum += p.length;
    }
  }
  if (phrase_count == 0) return 0.0;
  return static_cast<double>(token_sum) / static_cast<double>(phrase_count);
}

std::map<std::string, int> lexical_diversity(const std::vector<ParsedDoc>& docs) {
  std::map<std::string, std::set<std::string>> lemmas;
  for (const ParsedDoc& doc : docs) {
    for (const ParsedSentence& s : doc) {
      for (const ParsedToken& t : s.tokens) {
        lemmas[t.upos].insert(lower(t.lemma));
      }
    }
  }
  std::map<std::string, int> out;
  for (const auto& [tag, set] : lemmas) {
    out[tag] = static_cast<int>(set.size());
  }
  return out;
}

SyntacticReport syntactic_report(const std::vector<ParsedDoc>& docs) {
  SyntacticReport report;
  report.pos_distribution = pos_distribution(docs);
  double depth_sum = 0.0;
  std::size_t doc_count = 0;
  for (const ParsedDoc& doc : docs) {
    int doc_max = 0;
    for (const ParsedSentence& s : doc) {
      doc_max = std::max(doc_max, max_dep_depth(s));
    }
    if (doc_max > 0) {
      depth_sum += doc_max;
      ++doc_count;
    }
  }
  report.max_dep_depth =
      doc_count == 0 ? 0.0 : depth_sum / static_cast<double>(doc_count);
  report.syntactic_complexity = syntactic_complexity(docs);
  report.syntactic_ambiguity = syntactic_ambiguity(docs);
  report.lexical_diversity = lexical_diversity(docs);
  return report;
}

}  // namespace profkit
