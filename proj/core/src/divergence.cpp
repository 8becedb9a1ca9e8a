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

#include "profkit/divergence.hpp"

#include <cmath>

#include "profkit/errors.hpp"

namespace profkit {

std::vector<TfIdfVector> tfidf_corpus(const std::vector<TokenizedDoc>& docs,
                                      const Stoplist& stoplist) {
  if (docs.size() < 2) {
    throw DataError("tf-idf needs a corpus of at least 2 documents");
  }
  std::vector<TfIdfVector> vectors(docs.size());
  std::map<std::string, int> df;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    for (const std::string& token : docs[d].tokens) {
      if (stoplist.contains(token)) continue;
      if (vectors[d].term_counts[token]++ == 0) ++df[token];
    }
    vectors[d].doc_length = docs[d].tokens.size();
  }
  const double n = static_cast<double>(docs.size());
  for (TfIdfVector& vec : vectors) {
    for (const auto& [term, tf] : vec.term_counts) {
      double idf = std::log(n / static_cast<double>(df.at(term)));
      vec.weights[term] = static_cast<double>(tf) * idf;
    }
  }
  return vectors;
}

TermDistribution to_distribution(const TfIdfVector& vec,
                                 const std::set<std::string>& support,
                                 double epsilon) {
  if (support.empty()) {
    throw DataError("term distribution needs a non-empty support");
  }
  TermDistribution dist;
  double total = 0.0;
  for (const std::string& term : support) {
    auto it = vec.weights.find(term);
    double mass = (it == vec.weights.end() ? 0.0 : it->second) + epsilon;
    dist.probs[term] = mass;
    total += mass;
  }
  for (auto& [term, p] : dist.probs) p /= total;
  return dist;
}

double kl_divergence(const TermDistribution& p, const TermDistribution& q) {
  if (p.probs.size() != q.probs.size()) {
    throw DataError("KL divergence needs matching supports");
  }
  double sum = 0.0;
  auto qi = q.probs.begin();
  for (const auto& [term, pp] : p.probs) {
    if (qi == q.probs.end() || qi->first != term) {
      throw DataError("KL divergence needs matching supports");
    }
    sum += pp * std::log(pp / qi->second);
    ++qi;
  }
  return sum;
}

std::set<std::string> union_support(const TfIdfVector& a, const TfIdfVector& b) {
  std::set<std::string> support;
  for (const auto& [term, w] : a.weights) support.insert(term);
  for (const auto& [term, w] : b.weights) support.insert(term);
  return support;
}

KlDirection parse_kl_direction(std::string_view name) {
  if (name == "machine-vs-human") return KlDirection::MachineVsHuman;
  if (name == "human-vs-machine") return KlDirection::HumanVsMachine;
  throw ConfigError("unknown KL direction \"" + std::string(name) +
                    "\" (expected machine-vs-human or human-vs-machine)");
}

double kl_between_docs(const TfIdfVector& a, const TfIdfVector& b,
                       double epsilon) {
  std::set<std::string> support = union_support(a, b);
  if (support.empty()) return 0.0;
  return kl_divergence(to_distribution(a, support, epsilon),
                       to_distribution(b, support, epsilon));
}

std::set<std::string> unique_terms(const TfIdfVector& a, const TfIdfVector& b) {
  std::set<std::string> unique;
  for (const auto& [term, weight] : a.weights) {
    if (weight > 0.0 && !b.term_counts.contains(term)) unique.insert(term);
  }
  return unique;
}

std::vector<std::string> mesh_novelty(const std::set<std::string>& unique,
                                      const std::vector<std::string>& doc_tokens,
                                      const MeshVocabulary& vocab) {
  std::set<std::string> hits;
  for (const std::string& term : unique) {
    if (vocab.contains(term)) hits.insert(term);
  }
  // Multi-word descriptors: re-join sliding windows of 2-3 adjacent tokens
  // whose words are all in the unique set.
  for (std::size_t width = 2; width <= 3; ++width) {
    if (doc_tokens.size() < width) break;
    for (std::size_t i = 0; i + width <= doc_tokens.size(); ++i) {
      bool all_unique = true;
      for (std::size_t k = 0; k < width; ++k) {
        if (!unique.contains(doc_tokens[i + k])) {
          all_unique = false;
          break;
        }
      }
      if (!all_unique) continue;
      std::string phrase = doc_tokens[i];
      for (std::size_t k = 1; k < width; ++k) {
        phrase += ' ';
        phrase += doc_tokens[i + k];
      }
      if (vocab.contains(phrase)) hits.insert(std::move(phrase));
    }
  }
  return std::vector<std::string>(hits.begin(), hits.end());
}

}  // namespace profkit
