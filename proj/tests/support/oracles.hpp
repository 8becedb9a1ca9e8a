// Copyright 2026 The Profkit Authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent re-derivations of the metric definitions, written against the
// documented behavior rather than the library code, so the two can disagree.
// Everything here favors clarity over speed; inputs stay small.

#ifndef PROFKIT_TESTS_ORACLES_HPP
#define PROFKIT_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "profkit/lexical.hpp"
#include "profkit/text.hpp"

namespace oracles {

using Tokens = std::vector<std::string>;

// Full-matrix LCS (the library keeps two rows).
inline std::size_t lcs_full_matrix(const Tokens& a, const Tokens& b) {
  std::vector<std::vector<std::size_t>> dp(a.size() + 1,
                                           std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      dp[i][j] = a[i - 1] == b[j - 1]
                     ? dp[i - 1][j - 1] + 1
                     : std::max(dp[i - 1][j], dp[i][j - 1]);
    }
  }
  return dp[a.size()][b.size()];
}

struct Rouge {
  double precision = 0.0, recall = 0.0, f1 = 0.0;
};

inline Rouge rouge_l(const Tokens& candidate, const Tokens& reference) {
  Rouge r;
  if (candidate.empty() || reference.empty()) return r;
  double lcs = static_cast<double>(lcs_full_matrix(candidate, reference));
  r.precision = lcs / static_cast<double>(candidate.size());
  r.recall = lcs / static_cast<double>(reference.size());
  if (r.precision + r.recall > 0) {
    r.f1 = 2 * r.precision * r.recall / (r.precision + r.recall);
  }
  return r;
}

// BLEU in log space with map-keyed n-grams. Unigram precision is exact
// (zero stays zero); higher orders with zero matches use (m+1)/(t+1).
inline double bleu(const Tokens& candidate, const Tokens& reference,
                   int max_n = 4) {
  if (candidate.empty() || reference.empty()) return 0.0;
  double log_sum = 0.0;
  for (int n = 1; n <= max_n; ++n) {
    std::map<Tokens, int> cand_counts, ref_counts;
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= candidate.size(); ++i) {
      ++cand_counts[Tokens(candidate.begin() + static_cast<std::ptrdiff_t>(i),
                           candidate.begin() + static_cast<std::ptrdiff_t>(i) + n)];
    }
    for (std::size_t i = 0; i + static_cast<std::size_t>(n) <= reference.size(); ++i) {
      ++ref_counts[Tokens(reference.begin() + static_cast<std::ptrdiff_t>(i),
                          reference.begin() + static_cast<std::ptrdiff_t>(i) + n)];
    }
    int total = 0, matched = 0;
    for (const auto& [gram, count] : cand_counts) {
      total += count;
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) matched += std::min(count, it->second);
    }
    double p;
    if (n == 1) {
      if (matched == 0) return 0.0;
      p = static_cast<double>(matched) / total;
    } else if (matched == 0) {
      p = static_cast<double>(matched + 1) / (total + 1);
    } else {
      p = static_cast<double>(matched) / total;
    }
    log_sum += std::log(p);
  }
  double score = std::exp(log_sum / max_n);
  if (candidate.size() < reference.size()) {
    score *= std::exp(1.0 - static_cast<double>(reference.size()) /
                                static_cast<double>(candidate.size()));
  }
  return score;
}

// METEOR stage semantics, re-derived:
//   stage 1 consumes min(count) per word;
//   stage 2 consumes per-stem-class quotas over the leftovers, taking words
//     without a synset first (alphabetical within each group);
//   stage 3 consumes per-synset quotas over what remains.
// Then every alignment meeting those quotas is enumerated and the chunk
// count is minimized. Exponential; keep inputs at <= 8 tokens per side.
struct MeteorOracle {
  struct Key {
    std::string word, stem, synset;
  };

  std::vector<Key> cand, ref;
  std::map<std::string, int> exact_quota, stem_quota, syn_quota;
  std::map<std::string, int> cap2c, cap2r, cap3c, cap3r;
  std::size_t total_quota = 0;

  MeteorOracle(const Tokens& candidate, const Tokens& reference,
               const profkit::SynonymTable& synonyms) {
    auto make = [&](const Tokens& tokens) {
      std::vector<Key> keys;
      for (const auto& t : tokens) {
        keys.push_back({t, profkit::stem(t), std::string(synonyms.synset_of(t))});
      }
      return keys;
    };
    cand = make(candidate);
    ref = make(reference);

    std::map<std::string, int> nc, nr;
    for (const auto& k : cand) ++nc[k.word];
    for (const auto& k : ref) ++nr[k.word];
    std::map<std::string, int> leftc, leftr;
    std::map<std::string, Key> by_word;
    for (const auto& k : cand) by_word.emplace(k.word, k);
    for (const auto& k : ref) by_word.emplace(k.word, k);
    for (const auto& [w, c] : nc) {
      int m = nr.count(w) ? std::min(c, nr[w]) : 0;
      if (m > 0) exact_quota[w] = m;
      if (c - m > 0) leftc[w] = c - m;
    }
    for (const auto& [w, r] : nr) {
      int m = nc.count(w) ? std::min(r, nc[w]) : 0;
      if (r - m > 0) leftr[w] = r - m;
    }

    std::map<std::string, std::vector<std::string>> stemc, stemr;
    for (const auto& [w, n] : leftc) stemc[by_word.at(w).stem].push_back(w);
    for (const auto& [w, n] : leftr) stemr[by_word.at(w).stem].push_back(w);
    auto consume = [&](std::vector<std::string> words,
                       std::map<std::string, int>& left,
                       std::map<std::string, int>& cap, int quota) {
      std::stable_sort(words.begin(), words.end(),
                       [&](const std::string& a, const std::string& b) {
                         return by_word.at(a).synset.empty() &&
                                !by_word.at(b).synset.empty();
                       });
      for (const auto& w : words) {
        if (quota == 0) break;
        int take = std::min(quota, left[w]);
        cap[w] += take;
        quota -= take;
      }
    };
    for (const auto& [s, wordsc] : stemc) {
      if (!stemr.count(s)) continue;
      int tc = 0, tr = 0;
      for (const auto& w : wordsc) tc += leftc[w];
      for (const auto& w : stemr[s]) tr += leftr[w];
      int quota = std::min(tc, tr);
      if (quota == 0) continue;
      stem_quota[s] = quota;
      consume(wordsc, leftc, cap2c, quota);
      consume(stemr[s], leftr, cap2r, quota);
    }

    std::map<std::string, int> sync, synr;
    for (const auto& [w, n] : leftc) {
      int resid = n - cap2c[w];
      const std::string& syn = by_word.at(w).synset;
      if (resid > 0 && !syn.empty()) {
        sync[syn] += resid;
        cap3c[w] = resid;
      }
    }
    for (const auto& [w, n] : leftr) {
      int resid = n - cap2r[w];
      const std::string& syn = by_word.at(w).synset;
      if (resid > 0 && !syn.empty()) {
        synr[syn] += resid;
        cap3r[w] = resid;
      }
    }
    for (const auto& [s, c] : sync) {
      if (!synr.count(s)) continue;
      int quota = std::min(c, synr[s]);
      if (quota > 0) syn_quota[s] = quota;
    }

    for (const auto& [k, v] : exact_quota) total_quota += static_cast<std::size_t>(v);
    for (const auto& [k, v] : stem_quota) total_quota += static_cast<std::size_t>(v);
    for (const auto& [k, v] : syn_quota) total_quota += static_cast<std::size_t>(v);
  }

  int stage_of(const Key& a, const Key& b) const {
    if (a.word == b.word) return 1;
    if (a.stem == b.stem) return 2;
    if (!a.synset.empty() && a.synset == b.synset) return 3;
    return 0;
  }

  // Exhaustive search over alignments that meet every quota.
  std::size_t best_chunks = std::numeric_limits<std::size_t>::max();
  std::size_t matches = 0;

  void solve() {
    std::vector<bool> used(ref.size(), false);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    auto re = exact_quota;
    auto rs = stem_quota;
    auto ry = syn_quota;
    auto c2c = cap2c;
    auto c2r = cap2r;
    auto c3c = cap3c;
    auto c3r = cap3r;
    dfs(0, used, pairs, re, rs, ry, c2c, c2r, c3c, c3r);
    matches = total_quota;
    if (total_quota == 0) best_chunks = 0;
  }

  static std::size_t chunk_count(
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

  void dfs(std::size_t ci, std::vector<bool>& used,
           std::vector<std::pair<std::size_t, std::size_t>>& pairs,
           std::map<std::string, int>& re, std::map<std::string, int>& rs,
           std::map<std::string, int>& ry, std::map<std::string, int>& c2c,
           std::map<std::string, int>& c2r, std::map<std::string, int>& c3c,
           std::map<std::string, int>& c3r) {
    if (ci == cand.size()) {
      if (pairs.size() == total_quota) {
        best_chunks = std::min(best_chunks, chunk_count(pairs));
      }
      return;
    }
    dfs(ci + 1, used, pairs, re, rs, ry, c2c, c2r, c3c, c3r);
    for (std::size_t j = 0; j < ref.size(); ++j) {
      if (used[j]) continue;
      int stage = stage_of(cand[ci], ref[j]);
      if (stage == 0) continue;
      bool ok = false;
      if (stage == 1) {
        auto it = re.find(cand[ci].word);
        if (it != re.end() && it->second > 0) {
          --it->second;
          ok = true;
        }
      } else if (stage == 2) {
        auto it = rs.find(cand[ci].stem);
        if (it != rs.end() && it->second > 0 && c2c[cand[ci].word] > 0 &&
            c2r[ref[j].word] > 0) {
          --it->second;
          --c2c[cand[ci].word];
          --c2r[ref[j].word];
          ok = true;
        }
      } else {
        auto it = ry.find(cand[ci].synset);
        if (it != ry.end() && it->second > 0 && c3c[cand[ci].word] > 0 &&
            c3r[ref[j].word] > 0) {
          --it->second;
          --c3c[cand[ci].word];
          --c3r[ref[j].word];
          ok = true;
        }
      }
      if (!ok) continue;
      used[j] = true;
      pairs.emplace_back(ci, j);
      dfs(ci + 1, used, pairs, re, rs, ry, c2c, c2r, c3c, c3r);
      pairs.pop_back();
      used[j] = false;
      if (stage == 1) {
        ++re[cand[ci].word];
      } else if (stage == 2) {
        ++rs[cand[ci].stem];
        ++c2c[cand[ci].word];
        ++c2r[ref[j].word];
      } else {
        ++ry[cand[ci].synset];
        ++c3c[cand[ci].word];
        ++c3r[ref[j].word];
      }
    }
  }
};

inline double meteor(const Tokens& candidate, const Tokens& reference,
                     const profkit::SynonymTable& synonyms) {
  if (candidate.empty() || reference.empty()) return 0.0;
  MeteorOracle oracle(candidate, reference, synonyms);
  oracle.solve();
  double m = static_cast<double>(oracle.total_quota);
  if (m == 0.0) return 0.0;
  double p = m / static_cast<double>(candidate.size());
  double r = m / static_cast<double>(reference.size());
  double f_mean = 10.0 * p * r / (r + 9.0 * p);
  double frag = static_cast<double>(oracle.best_chunks) / m;
  return f_mean * (1.0 - 0.5 * frag * frag * frag);
}

// Student-t two-sided p-value by Simpson integration of the density.
inline double student_t_p_simpson(double t, int df) {
  double v = static_cast<double>(df);
  double log_norm = std::lgamma((v + 1) / 2) - std::lgamma(v / 2) -
                    0.5 * std::log(v * std::acos(-1.0));
  auto pdf = [&](double x) {
    return std::exp(log_norm - (v + 1) / 2 * std::log1p(x * x / v));
  };
  // Integrate |x| > |t| by mapping the tail to a finite interval:
  // integral_t^inf pdf = integral over u in (0, 1] of pdf(t + (1-u)/u) / u^2.
  double a = std::fabs(t);
  const int steps = 20000;  // even
  double h = 1.0 / steps;
  auto g = [&](double u) {
    if (u <= 0.0) return 0.0;
    double x = a + (1.0 - u) / u;
    return pdf(x) / (u * u);
  };
  double sum = g(1.0);  // g(0) -> 0
  for (int i = 1; i < steps; ++i) {
    sum += g(i * h) * (i % 2 ? 4.0 : 2.0);
  }
  double tail = sum * h / 3.0;
  return std::min(1.0, 2.0 * tail);
}

}  // namespace oracles

#endif  // PROFKIT_TESTS_ORACLES_HPP
