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

#include "profkit/text.hpp"

#include <cstdint>

#include "profkit/errors.hpp"
#include "profkit/util.hpp"

namespace profkit {
namespace {

// Decodes one UTF-8 sequence starting at i. On malformed input returns -1 and
// advances i by one byte, so bad bytes act as separators instead of aborting.
std::int32_t next_code_point(std::string_view s, std::size_t& i) {
  unsigned char b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  std::int32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return -1;
  }
  if (i + static_cast<std::size_t>(len) > s.size()) {
    ++i;
    return -1;
  }
  for (int k = 1; k < len; ++k) {
    unsigned char bk = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
    if ((bk & 0xC0) != 0x80) {
      ++i;
      return -1;
    }
    cp = (cp << 6) | (bk & 0x3F);
  }
  i += static_cast<std::size_t>(len);
  return cp;
}

// Letters and digits of the scripts this pipeline meets in PubMed text:
// ASCII, Latin-1 and extended Latin, Greek, Cyrillic, plus the major CJK,
// kana, Hangul, Hebrew and Arabic letter blocks. Symbols embedded in those
// ranges (multiplication/division signs, Greek punctuation, Cyrillic
// combining marks) are excluded so they split tokens like any punctuation.
bool is_word_char(std::int32_t cp) {
  if (cp < 0) return false;
  if (cp < 0x80) {
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
           (cp >= 'A' && cp <= 'Z');
  }
  if (cp == 0xAA || cp == 0xB5 || cp == 0xBA) return true;
  if (cp >= 0xC0 && cp <= 0xFF) return cp != 0xD7 && cp != 0xF7;
  if (cp >= 0x100 && cp <= 0x24F) return true;   // extended Latin
  if (cp >= 0x370 && cp <= 0x3FF) {              // Greek
    switch (cp) {
      case 0x374: case 0x375: case 0x37E: case 0x384: case 0x385: case 0x387:
        return false;
      default:
        return true;
    }
  }
  if (cp >= 0x400 && cp <= 0x481) return true;   // Cyrillic
  if (cp >= 0x48A && cp <= 0x52F) return true;
  if (cp >= 0x531 && cp <= 0x556) return true;   // Armenian
  if (cp >= 0x561 && cp <= 0x587) return true;
  if (cp >= 0x5D0 && cp <= 0x5EA) return true;   // Hebrew
  if (cp >= 0x620 && cp <= 0x64A) return true;   // Arabic
  if (cp >= 0x660 && cp <= 0x669) return true;   // Arabic-Indic digits
  if (cp >= 0x3041 && cp <= 0x3096) return true; // hiragana
  if (cp >= 0x30A1 && cp <= 0x30FA) return true; // katakana
  if (cp >= 0x4E00 && cp <= 0x9FFF) return true; // CJK unified
  if (cp >= 0xAC00 && cp <= 0xD7A3) return true; // Hangul
  return false;
}

// Simple folds for the scripts with a fixed uppercase/lowercase offset.
std::int32_t fold_case(std::int32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;  // Latin-1
  if (cp >= 0x391 && cp <= 0x3A9 && cp != 0x3A2) return cp + 0x20;  // Greek
  switch (cp) {  // accented Greek capitals
    case 0x386: return 0x3AC;
    case 0x388: return 0x3AD;
    case 0x389: return 0x3AE;
    case 0x38A: return 0x3AF;
    case 0x38C: return 0x3CC;
    case 0x38E: return 0x3CD;
    case 0x38F: return 0x3CE;
    default: break;
  }
  if (cp >= 0x410 && cp <= 0x42F) return cp + 0x20;  // Cyrillic
  if (cp >= 0x400 && cp <= 0x40F) return cp + 0x50;
  return cp;
}

void append_utf8(std::string& out, std::int32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t i = 0;
  while (i < text.size()) {
    std::int32_t cp = next_code_point(text, i);
    if (is_word_char(cp)) {
      append_utf8(current, fold_case(cp));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

Stoplist::Stoplist(std::vector<std::string> words) {
  for (auto& w : words) words_.insert(std::move(w));
}

Stoplist Stoplist::load(const std::filesystem::path& path) {
  Stoplist list;
  std::string content = read_file(path);
  for (const std::string& raw : split(content, '\n')) {
    std::string line = raw;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (!line.empty()) list.words_.insert(std::move(line));
  }
  return list;
}

bool Stoplist::contains(std::string_view word) const {
  return words_.contains(std::string(word));
}

std::vector<std::string> remove_stopwords(const std::vector<std::string>& tokens,
                                          const Stoplist& stoplist) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const std::string& t : tokens) {
    if (!stoplist.contains(t)) out.push_back(t);
  }
  return out;
}

}  // namespace profkit
