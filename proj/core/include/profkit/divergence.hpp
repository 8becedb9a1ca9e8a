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

#ifndef PROFKIT_DIVERGENCE_HPP
#define PROFKIT_DIVERGENCE_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "profkit/corpus.hpp"
#include "profkit/mesh_vocab.hpp"
#include "profkit/text.hpp"

namespace profkit {

struct TfIdfVector {
  // Stopwords are excluded before weighting.
  std::map<std::string, double> weights;
  std::size_t doc_length = 0;
  // Raw (stopword-filtered) token counts; unique-term extraction needs the
  // other document's token set, including idf-zero terms.
  std::map<std::string, int> term_counts;
};

struct TermDistribution {
  std::map<std::string, double> probs;  // full support, every prob > 0
};

// tf = raw count in doc, idf = ln(N/df). Terms present in every document get
// weight 0 (idf = ln 1). Throws DataError when docs.size() < 2; a lone
// document has no corpus to be distinct from.
std::vector<TfIdfVector> tfidf_corpus(const std::vector<TokenizedDoc>& docs,
                                      const Stoplist& stoplist);

// Additive-epsilon smoothing over the given support, then renormalization.
TermDistribution to_distribution(const TfIdfVector& vec,
                                 const std::set<std::string>& support,
                                 double epsilon = 1e-10);

// D(p||q) in nats. Throws DataError when supports differ.
double kl_divergence(const TermDistribution& p, const TermDistribution& q);

std::set<std::string> union_support(const TfIdfVector& a, const TfIdfVector& b);

// KL over the union support of the pair, D(a||b) by default.
enum class KlDirection { MachineVsHuman, HumanVsMachine };
KlDirection parse_kl_direction(std::string_view name);

double kl_between_docs(const TfIdfVector& a, const TfIdfVector& b,
                       double epsilon = 1e-10);

// Terms with positive tf-idf weight in a and absent from b's token set.
std::set<std::string> unique_terms(const TfIdfVector& a, const TfIdfVector& b);

// Unique terms (and 2-3 token phrases re-joined from adjacent unique tokens
// of the source document) matching a descriptor, sorted lexicographically.
// doc_tokens must be the stopword-filtered token stream the vector was built
// from; phrase windows are taken over it.
std::vector<std::string> mesh_novelty(const std::set<std::string>& unique,
                                      const std::vector<std::string>& doc_tokens,
                                      const MeshVocabulary& vocab);

}  // namespace profkit

#endif  // PROFKIT_DIVERGENCE_HPP
