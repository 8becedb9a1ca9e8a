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

#ifndef PROFKIT_MESH_VOCAB_HPP
#define PROFKIT_MESH_VOCAB_HPP

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace profkit {

// Descriptor vocabulary from the NLM descriptor XML (DescriptorRecordSet) or
// a plain-text fallback: one descriptor per line, optional tab-separated tree
// numbers after it. Lookups are case-insensitive (keys stored lowercase).
class MeshVocabulary {
 public:
  static MeshVocabulary load(const std::filesystem::path& path);
  static MeshVocabulary from_xml(std::string_view xml);
  static MeshVocabulary from_text(std::string_view text);

  void add(std::string descriptor, std::vector<std::string> tree_numbers);

  bool contains(std::string_view term) const;
  // Empty list for unknown descriptors.
  const std::vector<std::string>& tree_numbers(std::string_view term) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> entries_;
};

}  // namespace profkit

#endif  // PROFKIT_MESH_VOCAB_HPP
