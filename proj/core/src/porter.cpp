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

// Porter's suffix-stripping algorithm in its original published form. Within
// a step the first suffix that string-matches wins even when its condition
// then fails; this mirrors the reference implementation's if/else chains and
// matters for words like "rational".

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "profkit/text.hpp"

namespace profkit {
namespace {

bool is_ascii_lower_word(std::string_view w) {
  for (char c : w) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

// A letter is a consonant unless it is a, e, i, o, u, or a y preceded by a
// consonant.
bool is_consonant(const std::string& w, std::size_t i) {
  switch (w[i]) {
    case 'a': case 'e': case 'i': case 'o': case 'u':
      return false;
    case 'y':
      return i == 0 ? true : !is_consonant(w, i - 1);
    default:
      return true;
  }
}

// Number of VC sequences in the first `len` letters.
int measure(const std::string& w, std::size_t len) {
  int m = 0;
  std::size_t i = 0;
  while (i < len && is_consonant(w, i)) ++i;
  while (i < len) {
    while (i < len && !is_consonant(w, i)) ++i;
    if (i == len) break;
    ++m;
    while (i < len && is_consonant(w, i)) ++i;
  }
  return m;
}

bool has_vowel(const std::string& w, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (!is_consonant(w, i)) return true;
  }
  return false;
}

bool double_consonant(const std::string& w, std::size_t len) {
  if (len < 2) return false;
  if (w[len - 1] != w[len - 2]) return false;
  return is_consonant(w, len - 1);
}

// *o: stem ends consonant-vowel-consonant and the final consonant is not
// w, x or y.
bool cvc_end(const std::string& w, std::size_t len) {
  if (len < 3) return false;
  if (!is_consonant(w, len - 3) || is_consonant(w, len - 2) ||
      !is_consonant(w, len - 1)) {
    return false;
  }
  char c = w[len - 1];
  return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(const std::string& w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         std::string_view(w).substr(w.size() - suffix.size()) == suffix;
}

struct Rule {
  std::string_view suffix;
  std::string_view replacement;
};

// First matching suffix decides; replace only when measure(stem) > threshold.
bool apply_first_match(std::string& w, const std::vector<Rule>& rules,
                       int m_threshold) {
  for (const Rule& r : rules) {
    if (!ends_with(w, r.suffix)) continue;
    std::size_t stem_len = w.size() - r.suffix.size();
    if (measure(w, stem_len) > m_threshold) {
      w.resize(stem_len);
      w.append(r.replacement);
    }
    return true;
  }
  return false;
}

void step_1a(std::string& w) {
  if (ends_with(w, "sses")) {
    w.resize(w.size() - 2);
  } else if (ends_with(w, "ies")) {
    w.resize(w.size() - 2);
  } else if (ends_with(w, "ss")) {
    // unchanged
  } else if (ends_with(w, "s")) {
    w.resize(w.size() - 1);
  }
}

void step_1b(std::string& w) {
  if (ends_with(w, "eed")) {
    if (measure(w, w.size() - 3) > 0) w.resize(w.size() - 1);
    return;
  }
  bool stripped = false;
  if (ends_with(w, "ed") && has_vowel(w, w.size() - 2)) {
    w.resize(w.size() - 2);
    stripped = true;
  } else if (ends_with(w, "ing") && has_vowel(w, w.size() - 3)) {
    w.resize(w.size() - 3);
    stripped = true;
  }
  if (!stripped) return;
  if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
    w.push_back('e');
  } else if (double_consonant(w, w.size())) {
    char last = w.back();
    if (last != 'l' && last != 's' && last != 'z') w.resize(w.size() - 1);
  } else if (measure(w, w.size()) == 1 && cvc_end(w, w.size())) {
    w.push_back('e');
  }
}

void step_1c(std::string& w) {
  if (ends_with(w, "y") && has_vowel(w, w.size() - 1)) {
    w.back() = 'i';
  }
}

void step_2(std::string& w) {
  static const std::vector<Rule> rules = {
      {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},
      {"anci", "ance"},   {"izer", "ize"},    {"abli", "able"},
      {"alli", "al"},     {"entli", "ent"},   {"eli", "e"},
      {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
      {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"},
      {"fulness", "ful"}, {"ousness", "ous"}, {"aliti", "al"},
      {"iviti", "ive"},   {"biliti", "ble"}};
  apply_first_match(w, rules, 0);
}

void step_3(std::string& w) {
  static const std::vector<Rule> rules = {
      {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
      {"ical", "ic"},  {"ful", ""},   {"ness", ""}};
  apply_first_match(w, rules, 0);
}

void step_4(std::string& w) {
  static const std::vector<Rule> rules = {
      {"ement", ""}, {"ance", ""}, {"ence", ""}, {"able", ""}, {"ible", ""},
      {"ment", ""},  {"ant", ""},  {"ent", ""},  {"ism", ""},  {"ate", ""},
      {"iti", ""},   {"ous", ""},  {"ive", ""},  {"ize", ""},  {"ion", ""},
      {"al", ""},    {"er", ""},   {"ic", ""},   {"ou", ""}};
  for (const Rule& r : rules) {
    if (!ends_with(w, r.suffix)) continue;
    std::size_t stem_len = w.size() - r.suffix.size();
    if (r.suffix == "ion" &&
        !(stem_len > 0 && (w[stem_len - 1] == 's' || w[stem_len - 1] == 't'))) {
      return;
    }
    if (measure(w, stem_len) > 1) w.resize(stem_len);
    return;
  }
}

void step_5a(std::string& w) {
  if (!ends_with(w, "e")) return;
  std::size_t stem_len = w.size() - 1;
  int m = measure(w, stem_len);
  if (m > 1 || (m == 1 && !cvc_end(w, stem_len))) {
    w.resize(stem_len);
  }
}

void step_5b(std::string& w) {
  if (w.size() >= 2 && w.back() == 'l' && double_consonant(w, w.size()) &&
      measure(w, w.size()) > 1) {
    w.resize(w.size() - 1);
  }
}

}  // namespace

std::string stem(std::string_view token) {
  if (token.size() < 3 || !is_ascii_lower_word(token)) {
    return std::string(token);
  }
  std::string w(token);
  step_1a(w);
  step_1b(w);
  step_1c(w);
  step_2(w);
  step_3(w);
  step_4(w);
  step_5a(w);
  step_5b(w);
  return w;
}

}  // namespace profkit
