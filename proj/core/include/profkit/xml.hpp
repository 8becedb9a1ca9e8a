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

#ifndef PROFKIT_XML_HPP
#define PROFKIT_XML_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace profkit {

// Minimal DOM for the XML the NCBI services emit: elements, attributes,
// character data, comments, CDATA, the five predefined entities plus numeric
// references. DOCTYPE declarations are skipped, not validated. Parse errors
// carry the element path (e.g. "PubmedArticleSet/PubmedArticle/MedlineCitation")
// so failures in large payloads are locatable.
struct XmlNode {
  std::string name;
  std::map<std::string, std::string> attributes;
  std::vector<std::unique_ptr<XmlNode>> children;
  // Mixed content splits across two fields so document order survives:
  // text holds character data before the first child, tail the data between
  // this element's end tag and the next sibling. Leaf elements keep all
  // their character data in text.
  std::string text;
  std::string tail;

  // First child element with the given name, or nullptr.
  const XmlNode* child(std::string_view child_name) const;
  std::vector<const XmlNode*> children_named(std::string_view child_name) const;
  // Descends through a '/'-separated path of first-matching children.
  const XmlNode* find_path(std::string_view path) const;
  // Text of this node and all descendants, in document order.
  std::string deep_text() const;
};

// Parses a complete document and returns its root element.
// Throws DataError on malformed input, naming the open element path.
std::unique_ptr<XmlNode> parse_xml(std::string_view input);

}  // namespace profkit

#endif  // PROFKIT_XML_HPP
