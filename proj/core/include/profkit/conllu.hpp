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

#ifndef PROFKIT_CONLLU_HPP
#define PROFKIT_CONLLU_HPP

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace profkit {

struct ParsedToken {
  std::string form;
  std::string lemma;
  std::string upos;
  std::size_t head = 0;  // 1-based index into the sentence, 0 = root
  std::string deprel;

  bool operator==(const ParsedToken&) const = default;
};

struct ParsedSentence {
  std::vector<ParsedToken> tokens;
  std::size_t root_index = 0;  // 0-based index of the token with head 0

  bool operator==(const ParsedSentence&) const = default;
};

// Blank-line separated sentences of 10 tab-separated columns; '#' comment
// lines, multiword-token ranges (1-2) and empty nodes (1.1) are skipped.
// Each sentence is validated as a single-rooted acyclic tree. Errors name the
// input line number.
std::vector<ParsedSentence> parse_conllu(std::string_view text,
                                         std::string_view origin = "<memory>");
std::vector<ParsedSentence> load_conllu(const std::filesystem::path& path);

std::string serialize_conllu(const std::vector<ParsedSentence>& sentences);

}  // namespace profkit

#endif  // PROFKIT_CONLLU_HPP
