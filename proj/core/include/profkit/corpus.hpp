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

#ifndef PROFKIT_CORPUS_HPP
#define PROFKIT_CORPUS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace profkit {

enum class Variant { Human, MeshGen, AbstractGen, Paraphrase };

std::string_view variant_name(Variant v);
Variant parse_variant(std::string_view name);

struct Researcher {
  std::string id;
  std::string name;
  std::string affiliation;
  std::string department;              // may be empty
  std::optional<std::string> human_profile;

  bool operator==(const Researcher&) const = default;
};

struct Author {
  std::string last_name;
  std::string fore_name;

  bool operator==(const Author&) const = default;
};

struct PublicationRecord {
  std::string pmid;                    // digits only
  std::string title;
  std::string abstract_text;           // empty when the article has none
  std::vector<std::string> mesh_terms; // deduplicated case-insensitively
  std::vector<Author> authors;         // PubMed order
  int year = 0;

  bool operator==(const PublicationRecord&) const = default;
};

struct ProfileDoc {
  std::string researcher_id;
  Variant variant = Variant::Human;
  std::string text;
  std::string created_at;              // ISO-8601 UTC

  bool operator==(const ProfileDoc&) const = default;
};

struct TokenizedDoc {
  std::vector<std::string> tokens;
  Variant source_variant = Variant::Human;
};

struct Corpus {
  std::vector<Researcher> researchers;
  std::vector<PublicationRecord> publications;
  std::vector<ProfileDoc> profiles;

  bool operator==(const Corpus&) const = default;
};

// JSON Lines, one object per record, kind field discriminates:
// {"kind":"researcher"|"publication"|"profile", ...}. Serialization is
// deterministic (sorted keys) so save(load(x)) is byte-stable.
void save_corpus(const Corpus& corpus, const std::filesystem::path& path);
Corpus load_corpus(const std::filesystem::path& path);

std::string serialize_corpus(const Corpus& corpus);
Corpus parse_corpus(std::string_view jsonl, std::string_view origin = "<memory>");

}  // namespace profkit

#endif  // PROFKIT_CORPUS_HPP
