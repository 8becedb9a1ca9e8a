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

#include "profkit/mesh_vocab.hpp"

#include <cctype>

#include "profkit/errors.hpp"
#include "profkit/util.hpp"
#include "profkit/xml.hpp"

namespace profkit {

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

}  // namespace

void MeshVocabulary::add(std::string descriptor,
                         std::vector<std::string> tree_numbers) {
  entries_[lower(descriptor)] = std::move(tree_numbers);
}

bool MeshVocabulary::contains(std::string_view term) const {
  return entries_.contains(lower(term));
}

const std::vector<std::string>& MeshVocabulary::tree_numbers(
    std::string_view term) const {
  static const std::vector<std::string> kEmpty;
  auto it = entries_.find(lower(term));
  return it == entries_.end() ? kEmpty : it->second;
}

MeshVocabulary MeshVocabulary::from_xml(std::string_view xml) {
  auto root = parse_xml(xml);
  if (root->name != "DescriptorRecordSet") {
    throw DataError("expected DescriptorRecordSet root, got <" + root->name +
                    ">");
  }
  MeshVocabulary vocab;
  for (const XmlNode* record : root->children_named("DescriptorRecord")) {
    const XmlNode* name = record->find_path("DescriptorName/String");
    if (name == nullptr) {
      throw DataError(
          "descriptor record missing DescriptorRecord/DescriptorName/String");
    }
    std::vector<std::string> trees;
    if (const XmlNode* tree_list = record->child("TreeNumberList")) {
      for (const XmlNode* tree : tree_list->children_named("TreeNumber")) {
        trees.push_back(trim(tree->text));
      }
    }
    vocab.add(trim(name->text), std::move(trees));
  }
  if (vocab.size() == 0) {
    throw DataError("descriptor vocabulary is empty");
  }
  return vocab;
}

MeshVocabulary MeshVocabulary::from_text(std::string_view text) {
  MeshVocabulary vocab;
  for (const std::string& raw : split(text, '\n')) {
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cols = split(line, '\t');
    std::string descriptor = trim(cols[0]);
    std::vector<std::string> trees;
    for (std::size_t i = 1; i < cols.size(); ++i) {
      std::string t = trim(cols[i]);
      if (!t.empty()) trees.push_back(std::move(t));
    }
    if (!descriptor.empty()) vocab.add(std::move(descriptor), std::move(trees));
  }
  if (vocab.size() == 0) {
    throw DataError("descriptor vocabulary is empty");
  }
  return vocab;
}

MeshVocabulary MeshVocabulary::load(const std::filesystem::path& path) {
  std::string content = read_file(path);
  // Sniff: descriptor XML starts with an XML declaration or the record set
  // element; anything else is the plain-text fallback.
  std::string head = trim(content.substr(0, 200));
  if (head.starts_with("<?xml") || head.starts_with("<!DOCTYPE") ||
      head.starts_with("<DescriptorRecordSet")) {
    return from_xml(content);
  }
  return from_text(content);
}

}  // namespace profkit
