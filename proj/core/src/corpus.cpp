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

#include "profkit/corpus.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <set>
#include <unordered_set>

#include "profkit/errors.hpp"
#include "profkit/util.hpp"

namespace profkit {

using json = nlohmann::json;

std::string_view variant_name(Variant v) {
  switch (v) {
    case Variant::Human: return "Human";
    case Variant::MeshGen: return "MeshGen";
    case Variant::AbstractGen: return "AbstractGen";
    case Variant::Paraphrase: return "Paraphrase";
  }
  throw DataError("invalid variant value");
}

Variant parse_variant(std::string_view name) {
  if (name == "Human") return Variant::Human;
  if (name == "MeshGen") return Variant::MeshGen;
  if (name == "AbstractGen") return Variant::AbstractGen;
  if (name == "Paraphrase") return Variant::Paraphrase;
  throw DataError("unknown profile variant: " + std::string(name));
}

namespace {

json researcher_to_json(const Researcher& r) {
  json j;
  j["kind"] = "researcher";
  j["id"] = r.id;
  j["name"] = r.name;
  j["affiliation"] = r.affiliation;
  if (!r.department.empty()) j["department"] = r.department;
  if (r.human_profile) j["human_profile"] = *r.human_profile;
  return j;
}

json publication_to_json(const PublicationRecord& p) {
  json j;
  j["kind"] = "publication";
  j["pmid"] = p.pmid;
  j["title"] = p.title;
  j["abstract"] = p.abstract_text;
  j["mesh_terms"] = p.mesh_terms;
  json authors = json::array();
  for (const Author& a : p.authors) {
    authors.push_back({{"last_name", a.last_name}, {"fore_name", a.fore_name}});
  }
  j["authors"] = std::move(authors);
  j["year"] = p.year;
  return j;
}

json profile_to_json(const ProfileDoc& p) {
  json j;
  j["kind"] = "profile";
  j["researcher_id"] = p.researcher_id;
  j["variant"] = std::string(variant_name(p.variant));
  j["text"] = p.text;
  j["created_at"] = p.created_at;
  return j;
}

const json& require(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw DataError(std::string("missing field \"") + key + "\"");
  }
  return *it;
}

Researcher researcher_from_json(const json& j) {
  Researcher r;
  r.id = require(j, "id").get<std::string>();
  r.name = require(j, "name").get<std::string>();
  r.affiliation = require(j, "affiliation").get<std::string>();
  if (j.contains("department")) r.department = j["department"].get<std::string>();
  if (j.contains("human_profile")) {
    r.human_profile = j["human_profile"].get<std::string>();
    if (trim(*r.human_profile).empty()) {
      throw DataError("researcher " + r.id + ": human_profile is blank");
    }
  }
  if (r.id.empty()) throw DataError("researcher with empty id");
  return r;
}

PublicationRecord publication_from_json(const json& j) {
  PublicationRecord p;
  p.pmid = require(j, "pmid").get<std::string>();
  if (!digits_only(p.pmid)) {
    throw DataError("publication pmid not numeric: \"" + p.pmid + "\"");
  }
  p.title = require(j, "title").get<std::string>();
  p.abstract_text = require(j, "abstract").get<std::string>();
  std::set<std::string> seen;
  for (const auto& term : require(j, "mesh_terms")) {
    std::string t = term.get<std::string>();
    std::string key = t;
    for (char& c : key) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (seen.insert(key).second) p.mesh_terms.push_back(std::move(t));
  }
  for (const auto& a : require(j, "authors")) {
    p.authors.push_back({require(a, "last_name").get<std::string>(),
                         require(a, "fore_name").get<std::string>()});
  }
  p.year = require(j, "year").get<int>();
  return p;
}

ProfileDoc profile_from_json(const json& j) {
  ProfileDoc p;
  p.researcher_id = require(j, "researcher_id").get<std::string>();
  p.variant = parse_variant(require(j, "variant").get<std::string>());
  p.text = require(j, "text").get<std::string>();
  if (p.text.empty()) {
    throw DataError("profile for " + p.researcher_id + " has empty text");
  }
  p.created_at = require(j, "created_at").get<std::string>();
  return p;
}

}  // namespace

std::string serialize_corpus(const Corpus& corpus) {
  std::string out;
  for (const Researcher& r : corpus.researchers) {
    out += researcher_to_json(r).dump();
    out += '\n';
  }
  for (const PublicationRecord& p : corpus.publications) {
    out += publication_to_json(p).dump();
    out += '\n';
  }
  for (const ProfileDoc& p : corpus.profiles) {
    out += profile_to_json(p).dump();
    out += '\n';
  }
  return out;
}

Corpus parse_corpus(std::string_view jsonl, std::string_view origin) {
  Corpus corpus;
  std::unordered_set<std::string> researcher_ids;
  std::size_t line_no = 0;
  for (const std::string& line : split(jsonl, '\n')) {
    ++line_no;
    if (trim(line).empty()) continue;
    json j;
    try {
      j = json::parse(line);
      std::string kind = require(j, "kind").get<std::string>();
      if (kind == "researcher") {
        Researcher r = researcher_from_json(j);
        if (!researcher_ids.insert(r.id).second) {
          throw DataError("duplicate researcher id \"" + r.id + "\"");
        }
        corpus.researchers.push_back(std::move(r));
      } else if (kind == "publication") {
        corpus.publications.push_back(publication_from_json(j));
      } else if (kind == "profile") {
        corpus.profiles.push_back(profile_from_json(j));
      } else {
        throw DataError("unknown record kind \"" + kind + "\"");
      }
    } catch (const json::exception& e) {
      throw DataError(std::string(origin) + " line " +
                      std::to_string(line_no) + ": " + e.what());
    } catch (const DataError& e) {
      throw DataError(std::string(origin) + " line " +
                      std::to_string(line_no) + ": " + e.what());
    }
  }
  return corpus;
}

void save_corpus(const Corpus& corpus, const std::filesystem::path& path) {
  write_file(path, serialize_corpus(corpus));
}

Corpus load_corpus(const std::filesystem::path& path) {
  return parse_corpus(read_file(path), path.string());
}

}  // namespace profkit
