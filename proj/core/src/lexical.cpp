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

#include "profkit/lexical.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <unordered_map>

#include "profkit/errors.hpp"
#include "profkit/text.hpp"
#include "profkit/util.hpp"

namespace profkit {

RougeScores rouge_l(const Tokens& candidate, const Tokens& reference) {
  if (candidate.empty() || reference.empty()) return {};
  const std::size_t n = candidate.size();
  const std::size_t m = reference.size();
  // Two-row LCS table.
  std::vector<std::size_t> prev(m + 1, 0);
  std::vector<std::size_t> curr(m + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= m; ++j) {
      if (candidate[i - 1] == reference[j - 1]) {
        curr[j] = prev[j - 1] + 1;
      } else {
        curr[j] = std::max(prev[j], curr[j - 1]);
      }
    }
    std::swap(prev, curr);
  }
  const double lcs = static_cast<double>(prev[m]);
  RougeScores s;
  s.precision = lcs / static_cast<double>(n);
  s.recall = lcs / static_cast<double>(m);
  s.f1 = (s.precision + s.recall) > 0.0
             ? 2.0 * s.precision * s.recall / (s.precision + s.recall)
             : 0.0;
  return s;
}

namespace {

std::unordered_map<std::string, int> ngram_counts(const Tokens& tokens, int n) {
  std::unordered_map<std::string, int> counts;
  if (static_cast<int>(tokens.size()) < n) return counts;
  for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int k = 1; k < n; ++k) {
      key += '\x1f';
      key += tokens[i + static_cast<std::size_t>(k)];
    }
    ++counts[key];
  }
  return counts;
}

}  // namespace

double bleu(const Tokens& candidate, const Tokens& reference, int max_n) {
  if (max_n < 1) throw ConfigError("bleu max_n must be >= 1");
  if (candidate.empty()) return 0.0;
  double log_sum = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    auto cand_counts = ngram_counts(candidate, n);
    auto ref_counts = ngram_counts(reference, n);
    long long total = 0;
    long long matches = 0;
    for (const auto& [gram, count] : cand_counts) {
      total += count;
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) matches += std::min(count, it->second);
    }
    double p;
    if (n == 1) {
      // Unigram precision is never smoothed; no overlap means 0.
      if (matches == 0) return 0.0;
      p = static_cast<double>(matches) / static_cast<double>(total);
    } else if (matches == 0) {
      p = static_cast<double>(matches + 1) / static_cast<double>(total + 1);
    } else {
      p = static_cast<double>(matches) / static_cast<double>(total);
    }
    log_sum += std::log(p);
  }
  double bp = 1.0;
  if (candidate.size() < reference.size()) {
    bp = std::exp(1.0 - static_cast<double>(reference.size()) /
                            static_cast<double>(candidate.size()));
  }
  return bp * std::exp(log_sum / max_n);
}

SynonymTable SynonymTable::load(const std::filesystem::path& path) {
  SynonymTable table;
  std::string content = read_file(path);
  std::size_t line_no = 0;
  for (const std::string& raw : split(content, '\n')) {
    ++line_no;
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError(path.string() + " line " + std::to_string(line_no) +
                      ": expected word<TAB>synset_id");
    }
    table.add(trim(line.substr(0, tab)), trim(line.substr(tab + 1)));
  }
  return table;
}

void SynonymTable::add(std::string word, std::string synset_id) {
  table_[std::move(word)] = std::move(synset_id);
}

std::string_view SynonymTable::synset_of(std::string_view word) const {
  auto it = table_.find(std::string(word));
  return it == table_.end() ? std::string_view() : std::string_view(it->second);
}

namespace {

// Match stage for a token pair: 1 exact, 2 stem, 3 synonym, 0 none. The
// stage of a pair is a function of the tokens alone, which keeps staged
// maximality checkable by counting.
struct TokenKeys {
  std::string word;
  std::string stem_key;
  std::string synset;  // empty when absent from the table
};

int pair_stage(const TokenKeys& a, const TokenKeys& b) {
  if (a.word == b.word) return 1;
  if (a.stem_key == b.stem_key) return 2;
  if (!a.synset.empty() && a.synset == b.synset) return 3;
  return 0;
}

struct Budgets {
  // Pairs required per class, keyed by class string per stage.
  std::map<std::string, int> exact;
  std::map<std::string, int> stem_cls;
  std::map<std::string, int> synset_cls;
  // Instance caps per word for stages 2 and 3, per side.
  std::map<std::string, int> cap2_cand, cap2_ref, cap3_cand, cap3_ref;
  std::size_t total = 0;
};

// Stage budgets from counts. Stage 1 takes min word counts. Stage 2 takes
// min of per-stem leftovers; which words inside a stem class it consumes is
// settled here (words without a synset first, then input order) so stage 3
// budgets are well defined.
Budgets compute_budgets(const std::vector<TokenKeys>& cand,
                        const std::vector<TokenKeys>& ref) {
  Budgets b;
  std::map<std::string, int> cand_words, ref_words;
  for (const auto& t : cand) ++cand_words[t.word];
  for (const auto& t : ref) ++ref_words[t.word];

  std::map<std::string, int> left_cand, left_ref;
  std::map<std::string, const TokenKeys*> word_keys;
  for (const auto& t : cand) word_keys.emplace(t.word, &t);
  for (const auto& t : ref) word_keys.emplace(t.word, &t);

  for (const auto& [word, c] : cand_words) {
    auto it = ref_words.find(word);
    int matched = it == ref_words.end() ? 0 : std::min(c, it->second);
    if (matched > 0) b.exact[word] = matched;
    if (c - matched > 0) left_cand[word] = c - matched;
  }
  for (const auto& [word, r] : ref_words) {
    auto it = cand_words.find(word);
    int matched = it == cand_words.end() ? 0 : std::min(r, it->second);
    if (r - matched > 0) left_ref[word] = r - matched;
  }

  // Group leftovers by stem.
  std::map<std::string, std::vector<std::string>> stem_words_cand, stem_words_ref;
  for (const auto& [word, n] : left_cand) {
    stem_words_cand[word_keys.at(word)->stem_key].push_back(word);
  }
  for (const auto& [word, n] : left_ref) {
    stem_words_ref[word_keys.at(word)->stem_key].push_back(word);
  }

  auto consume = [&](std::vector<std::string>& words,
                     std::map<std::string, int>& left,
                     std::map<std::string, int>& consumed, int quota) {
    // Prefer words that cannot match in the synonym stage.
    std::stable_sort(words.begin(), words.end(),
                     [&](const std::string& a, const std::string& c) {
                       return word_keys.at(a)->synset.empty() &&
                              !word_keys.at(c)->synset.empty();
                     });
    for (const std::string& w : words) {
      if (quota == 0) break;
      int take = std::min(quota, left[w]);
      consumed[w] += take;
      quota -= take;
    }
  };

  std::map<std::string, int> consumed2_cand, consumed2_ref;
  for (auto& [stem_key, words] : stem_words_cand) {
    auto it = stem_words_ref.find(stem_key);
    if (it == stem_words_ref.end()) continue;
    int cand_total = 0, ref_total = 0;
    for (const auto& w : words) cand_total += left_cand[w];
    for (const auto& w : it->second) ref_total += left_ref[w];
    int quota = std::min(cand_total, ref_total);
    if (quota == 0) continue;
    b.stem_cls[stem_key] = quota;
    consume(words, left_cand, consumed2_cand, quota);
    consume(it->second, left_ref, consumed2_ref, quota);
  }
  b.cap2_cand = consumed2_cand;
  b.cap2_ref = consumed2_ref;

  // Stage 3 over what stages 1 and 2 left behind.
  std::map<std::string, int> syn_cand, syn_ref;
  std::map<std::string, int> resid_cand, resid_ref;
  for (const auto& [word, n] : left_cand) {
    int resid = n - consumed2_cand[word];
    const std::string& synset = word_keys.at(word)->synset;
    if (resid > 0 && !synset.empty()) {
      syn_cand[synset] += resid;
      resid_cand[word] = resid;
    }
  }
  for (const auto& [word, n] : left_ref) {
    int resid = n - consumed2_ref[word];
    const std::string& synset = word_keys.at(word)->synset;
    if (resid > 0 && !synset.empty()) {
      syn_ref[synset] += resid;
      resid_ref[word] = resid;
    }
  }
  for (const auto& [synset, c] : syn_cand) {
    auto it = syn_ref.find(synset);
    if (it == syn_ref.end()) continue;
    int quota = std::min(c, it->second);
    if (quota > 0) b.synset_cls[synset] = quota;
  }
  b.cap3_cand = resid_cand;
  b.cap3_ref = resid_ref;

  for (const auto& [k, v] : b.exact) b.total += static_cast<std::size_t>(v);
  for (const auto& [k, v] : b.stem_cls) b.total += static_cast<std::size_t>(v);
  for (const auto& [k, v] : b.synset_cls) b.total += static_cast<std::size_t>(v);
  return b;
}

// Search for the position-level alignment with the fewest chunks subject to
// the stage budgets. Exhaustive within a node budget (first minimal solution
// in left-to-right, continuation-first order wins); the greedy incumbent
// below guarantees a deterministic answer when the budget runs out.
class AlignmentSearch {
 public:
  AlignmentSearch(const std::vector<TokenKeys>& cand,
                  const std::vector<TokenKeys>& ref, Budgets budgets)
      : cand_(cand), ref_(ref), b_(std::move(budgets)) {}

  MeteorAlignment run() {
    MeteorAlignment greedy = greedy_alignment();
    if (b_.total == 0) return greedy;
    best_pairs_ = greedy.pairs;
    best_chunks_ = greedy.chunks;

    used_ref_.assign(ref_.size(), false);
    current_.clear();
    nodes_ = 0;
    rem_exact_ = b_.exact;
    rem_stem_ = b_.stem_cls;
    rem_syn_ = b_.synset_cls;
    cap2c_ = b_.cap2_cand;
    cap2r_ = b_.cap2_ref;
    cap3c_ = b_.cap3_cand;
    cap3r_ = b_.cap3_ref;
    suffix_word_.assign(cand_.size() + 1, {});
    for (std::size_t i = cand_.size(); i-- > 0;) {
      suffix_word_[i] = suffix_word_[i + 1];
      ++suffix_word_[i][cand_[i].word];
    }
    dfs(0, 0, 0);

    MeteorAlignment out;
    out.pairs = best_pairs_;
    out.chunks = best_chunks_;
    return out;
  }

 private:
  static constexpr std::size_t kNodeBudget = 200000;

  // Deterministic fallback: per class, earliest positions pair up in order.
  MeteorAlignment greedy_alignment() {
    std::vector<int> ref_of(cand_.size(), -1);
    std::vector<bool> ref_used(ref_.size(), false);
    std::map<std::string, int> rem_exact = b_.exact;
    std::map<std::string, int> rem_stem = b_.stem_cls;
    std::map<std::string, int> rem_syn = b_.synset_cls;
    auto cap2c = b_.cap2_cand;
    auto cap2r = b_.cap2_ref;
    auto cap3c = b_.cap3_cand;
    auto cap3r = b_.cap3_ref;

    auto try_stage = [&](int stage) {
      for (std::size_t i = 0; i < cand_.size(); ++i) {
        if (ref_of[i] >= 0) continue;
        for (std::size_t j = 0; j < ref_.size(); ++j) {
          if (ref_used[j] || pair_stage(cand_[i], ref_[j]) != stage) continue;
          if (!consume_budget(stage, i, j, rem_exact, rem_stem, rem_syn, cap2c,
                              cap2r, cap3c, cap3r)) {
            continue;
          }
          ref_of[i] = static_cast<int>(j);
          ref_used[j] = true;
          break;
        }
      }
    };
    try_stage(1);
    try_stage(2);
    try_stage(3);

    MeteorAlignment out;
    for (std::size_t i = 0; i < cand_.size(); ++i) {
      if (ref_of[i] >= 0) {
        out.pairs.emplace_back(i, static_cast<std::size_t>(ref_of[i]));
      }
    }
    out.chunks = count_chunks(out.pairs);
    return out;
  }

  bool consume_budget(int stage, std::size_t i, std::size_t j,
                      std::map<std::string, int>& rem_exact,
                      std::map<std::string, int>& rem_stem,
                      std::map<std::string, int>& rem_syn,
                      std::map<std::string, int>& cap2c,
                      std::map<std::string, int>& cap2r,
                      std::map<std::string, int>& cap3c,
                      std::map<std::string, int>& cap3r) {
    switch (stage) {
      case 1: {
        auto it = rem_exact.find(cand_[i].word);
        if (it == rem_exact.end() || it->second == 0) return false;
        --it->second;
        return true;
      }
      case 2: {
        auto it = rem_stem.find(cand_[i].stem_key);
        if (it == rem_stem.end() || it->second == 0) return false;
        auto ci = cap2c.find(cand_[i].word);
        auto ri = cap2r.find(ref_[j].word);
        if (ci == cap2c.end() || ci->second == 0) return false;
        if (ri == cap2r.end() || ri->second == 0) return false;
        --it->second;
        --ci->second;
        --ri->second;
        return true;
      }
      case 3: {
        auto it = rem_syn.find(cand_[i].synset);
        if (it == rem_syn.end() || it->second == 0) return false;
        auto ci = cap3c.find(cand_[i].word);
        auto ri = cap3r.find(ref_[j].word);
        if (ci == cap3c.end() || ci->second == 0) return false;
        if (ri == cap3r.end() || ri->second == 0) return false;
        --it->second;
        --ci->second;
        --ri->second;
        return true;
      }
      default:
        return false;
    }
  }

  void restore_budget(int stage, std::size_t i, std::size_t j) {
    switch (stage) {
      case 1:
        ++rem_exact_[cand_[i].word];
        break;
      case 2:
        ++rem_stem_[cand_[i].stem_key];
        ++cap2c_[cand_[i].word];
        ++cap2r_[ref_[j].word];
        break;
      case 3:
        ++rem_syn_[cand_[i].synset];
        ++cap3c_[cand_[i].word];
        ++cap3r_[ref_[j].word];
        break;
      default:
        break;
    }
  }

  static std::size_t count_chunks(
      const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    std::size_t chunks = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (k == 0 || pairs[k].first != pairs[k - 1].first + 1 ||
          pairs[k].second != pairs[k - 1].second + 1) {
        ++chunks;
      }
    }
    return chunks;
  }

  bool skip_feasible(std::size_t next_ci) const {
    for (const auto& [word, need] : rem_exact_) {
      if (need == 0) continue;
      auto it = suffix_word_[next_ci].find(word);
      if (it == suffix_word_[next_ci].end() || it->second < need) return false;
    }
    // Stems and synsets use the word caps as an optimistic availability
    // bound; over-admitting here only costs extra exploration.
    return true;
  }

  void dfs(std::size_t ci, std::size_t matched, std::size_t chunks) {
    // Equal-chunk alignments score identically, so only strict improvements
    // are worth exploring.
    if (done_ || chunks >= best_chunks_) return;
    if (++nodes_ > kNodeBudget) {
      done_ = true;
      return;
    }
    if (matched == b_.total) {
      if (chunks < best_chunks_) {
        best_chunks_ = chunks;
        best_pairs_ = current_;
        if (best_chunks_ == 1) done_ = true;
      }
      return;
    }
    if (ci >= cand_.size()) return;

    const bool continuing = !current_.empty() && current_.back().first == ci - 1;
    const std::size_t cont_ref =
        continuing ? current_.back().second + 1 : ref_.size();

    // Continuation first, then the remaining refs in order.
    for (std::size_t attempt = 0; attempt <= ref_.size(); ++attempt) {
      std::size_t j;
      if (attempt == 0) {
        if (cont_ref >= ref_.size()) continue;
        j = cont_ref;
      } else {
        j = attempt - 1;
        if (j == cont_ref) continue;  // already tried as the continuation
      }
      if (used_ref_[j]) continue;
      int stage = pair_stage(cand_[ci], ref_[j]);
      if (stage == 0) continue;
      if (!consume_budget(stage, ci, j, rem_exact_, rem_stem_, rem_syn_,
                          cap2c_, cap2r_, cap3c_, cap3r_)) {
        continue;
      }
      used_ref_[j] = true;
      current_.emplace_back(ci, j);
      std::size_t new_chunks = (continuing && j == cont_ref) ? chunks : chunks + 1;
      dfs(ci + 1, matched + 1, new_chunks);
      current_.pop_back();
      used_ref_[j] = false;
      restore_budget(stage, ci, j);
      if (done_) return;
    }

    if (skip_feasible(ci + 1)) dfs(ci + 1, matched, chunks);
  }

  const std::vector<TokenKeys>& cand_;
  const std::vector<TokenKeys>& ref_;
  Budgets b_;

  std::vector<bool> used_ref_;
  std::vector<std::pair<std::size_t, std::size_t>> current_;
  std::vector<std::pair<std::size_t, std::size_t>> best_pairs_;
  std::size_t best_chunks_ = SIZE_MAX;
  std::size_t nodes_ = 0;
  bool done_ = false;
  std::map<std::string, int> rem_exact_, rem_stem_, rem_syn_;
  std::map<std::string, int> cap2c_, cap2r_, cap3c_, cap3r_;
  std::vector<std::map<std::string, int>> suffix_word_;
};

std::vector<TokenKeys> make_keys(const Tokens& tokens,
                                 const SynonymTable& synonyms) {
  std::vector<TokenKeys> keys;
  keys.reserve(tokens.size());
  for (const std::string& t : tokens) {
    keys.push_back({t, stem(t), std::string(synonyms.synset_of(t))});
  }
  return keys;
}

}  // namespace

MeteorAlignment meteor_alignment(const Tokens& candidate, const Tokens& reference,
                                 const SynonymTable& synonyms) {
  auto cand_keys = make_keys(candidate, synonyms);
  auto ref_keys = make_keys(reference, synonyms);
  Budgets budgets = compute_budgets(cand_keys, ref_keys);
  return AlignmentSearch(cand_keys, ref_keys, std::move(budgets)).run();
}

double meteor(const Tokens& candidate, const Tokens& reference,
              const SynonymTable& synonyms) {
  if (candidate.empty() || reference.empty()) return 0.0;
  MeteorAlignment alignment = meteor_alignment(candidate, reference, synonyms);
  const double m = static_cast<double>(alignment.pairs.size());
  if (m == 0.0) return 0.0;
  const double p = m / static_cast<double>(candidate.size());
  const double r = m / static_cast<double>(reference.size());
  const double f_mean = 10.0 * p * r / (r + 9.0 * p);
  const double frag = static_cast<double>(alignment.chunks) / m;
  const double penalty = 0.5 * frag * frag * frag;
  return f_mean * (1.0 - penalty);
}

LexicalScores lexical_scores(const Tokens& candidate, const Tokens& reference,
                             const SynonymTable& synonyms) {
  LexicalScores s;
  s.rouge_l = rouge_l(candidate, reference);
  s.bleu = bleu(candidate, reference);
  s.meteor = meteor(candidate, reference, synonyms);
  return s;
}

}  // namespace profkit
