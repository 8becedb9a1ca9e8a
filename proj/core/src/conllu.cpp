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

#include "profkit/conllu.hpp"

#include "profkit/errors.hpp"
#include "profkit/util.hpp"

namespace profkit {

namespace {

struct PendingToken {
  ParsedToken token;
  std::size_t line_no = 0;
};

void validate_sentence(const std::vector<PendingToken>& pending,
                       std::string_view origin, ParsedSentence& out) {
  const std::size_t n = pending.size();
  std::size_t root_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const PendingToken& p = pending[i];
    if (p.token.head > n) {
      throw DataError(std::string(origin) + " line " +
                      std::to_string(p.line_no) + ": head " +
                      std::to_string(p.token.head) + " out of range (1.." +
                      std::to_string(n) + ")");
    }
    if (p.token.head == 0) {
      ++root_count;
      out.root_index = i;
    }
  }
  if (root_count != 1) {
    throw DataError(std::string(origin) + " line " +
                    std::to_string(pending.front().line_no) + ": sentence has " +
                    std::to_string(root_count) + " roots, expected 1");
  }
  // Walking to the root from every node must terminate within n steps.
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t node = i + 1;  // 1-based
    std::size_t steps = 0;
    while (node != 0) {
      node = pending[node - 1].token.head;
      if (++steps > n) {
        throw DataError(std::string(origin) + " line " +
                        std::to_string(pending[i].line_no) +
                        ": head cycle involving token " + std::to_string(i + 1));
      }
    }
  }
  out.tokens.reserve(n);
  for (const PendingToken& p : pending) out.tokens.push_back(p.token);
}

bool is_word_id(std::string_view id) {
  return digits_only(id);
}

bool is_skippable_id(std::string_view id) {
  // Multiword ranges ("4-5") and empty nodes ("5.1").
  return id.find('-') != std::string_view::npos ||
         id.find('.') != std::string_view::npos;
}

}  // namespace

std::vector<ParsedSentence> parse_conllu(std::string_view text,
                                         std::string_view origin) {
  std::vector<ParsedSentence> sentences;
  std::vector<PendingToken> pending;
  std::size_t line_no = 0;

  auto flush = [&]() {
    if (pending.empty()) return;
    ParsedSentence sentence;
    validate_sentence(pending, origin, sentence);
    sentences.push_back(std::move(sentence));
    pending.clear();
  };

  for (const std::string& raw : split(text, '\n')) {
    ++line_no;
    std::string line = raw;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 10) {
      throw DataError(std::string(origin) + " line " + std::to_string(line_no) +
                      ": expected 10 tab-separated columns, got " +
                      std::to_string(cols.size()));
    }
    const std::string& id = cols[0];
    if (is_skippable_id(id)) continue;
    if (!is_word_id(id)) {
      throw DataError(std::string(origin) + " line " + std::to_string(line_no) +
                      ": malformed token id \"" + id + "\"");
    }
    std::size_t expected = pending.size() + 1;
    if (std::stoull(id) != expected) {
      throw DataError(std::string(origin) + " line " + std::to_string(line_no) +
                      ": token id " + id + " out of sequence (expected " +
                      std::to_string(expected) + ")");
    }
    if (!digits_only(cols[6])) {
      throw DataError(std::string(origin) + " line " + std::to_string(line_no) +
                      ": malformed head \"" + cols[6] + "\"");
    }
    PendingToken p;
    p.line_no = line_no;
    p.token.form = cols[1];
    p.token.lemma = cols[2];
    p.token.upos = cols[3];
    p.token.head = std::stoull(cols[6]);
    p.token.deprel = cols[7];
    pending.push_back(std::move(p));
  }
  flush();
  return sentences;
}

std::vector<ParsedSentence> load_conllu(const std::filesystem::path& path) {
  return parse_conllu(read_file(path), path.string());
}

std::string serialize_conllu(const std::vector<ParsedSentence>& sentences) {
  std::string out;
  for (const ParsedSentence& sentence : sentences) {
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      const ParsedToken& t = sentence.tokens[i];
      out += std::to_string(i + 1);
      out += '\t';
      out += t.form;
      out += '\t';
      out += t.lemma;
      out += '\t';
      out += t.upos;
      out += "\t_\t_\t";
      out += std::to_string(t.head);
      out += '\t';
      out += t.deprel;
      out += "\t_\t_\n";
    }
    out += '\n';
  }
  return out;
}

}  // namespace profkit
