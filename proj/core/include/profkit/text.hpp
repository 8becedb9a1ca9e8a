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

#ifndef PROFKIT_TEXT_HPP
#define PROFKIT_TEXT_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace profkit {

// Lowercased word tokens from UTF-8 text. A token is a maximal run of
// alphanumeric code points; punctuation and whitespace separate tokens and
// never appear inside one. Case folding covers ASCII, Latin-1, Greek and
// Cyrillic; other scripts pass through unchanged. Invalid UTF-8 bytes are
// treated as token separators rather than raised, so arbitrary input is safe.
std::vector<std::string> tokenize(std::string_view text);

class Stoplist {
 public:
  Stoplist() = default;
  explicit Stoplist(std::vector<std::string> words);

  // One lowercase word per line; '#' starts a comment; blank lines ignored.
  static Stoplist load(const std::filesystem::path& path);

  bool contains(std::string_view word) const;
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const Stoplist& stoplist);

// Porter stemmer over lowercase ASCII tokens. Tokens with non-ASCII bytes or
// length < 3 are returned unchanged.
std::string stem(std::string_view token);

}  // namespace profkit

#endif  // PROFKIT_TEXT_HPP
