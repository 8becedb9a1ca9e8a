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

#include "profkit/xml.hpp"

#include <cctype>
#include <cstdint>

#include "profkit/errors.hpp"
#include "profkit/util.hpp"

namespace profkit {

const XmlNode* XmlNode::child(std::string_view child_name) const {
  for (const auto& c : children) {
    if (c->name == child_name) return c.get();
  }
  return nullptr;
}

std::vector<const XmlNode*> XmlNode::children_named(
    std::string_view child_name) const {
  std::vector<const XmlNode*> out;
  for (const auto& c : children) {
    if (c->name == child_name) out.push_back(c.get());
  }
  return out;
}

const XmlNode* XmlNode::find_path(std::string_view path) const {
  const XmlNode* node = this;
  for (const std::string& part : split(path, '/')) {
    if (node == nullptr) return nullptr;
    node = node->child(part);
  }
  return node;
}

std::string XmlNode::deep_text() const {
  std::string out = text;
  for (const auto& c : children) {
    out += c->deep_text();
    out += c->tail;
  }
  return out;
}

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
         c == '.' || c == ':';
}

class Parser {
 public:
  explicit Parser(std::string_view input) : in_(input) {}

  std::unique_ptr<XmlNode> parse_document() {
    skip_misc();
    if (eof() || peek() != '<') {
      fail("expected root element");
    }
    auto root = parse_element();
    skip_misc();
    if (!eof()) fail("trailing content after root element");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    std::string where = path_.empty() ? "(document)" : join(path_, "/");
    throw DataError("xml: " + what + " at " + where);
  }

  bool eof() const { return pos_ >= in_.size(); }
  char peek() const { return in_[pos_]; }
  bool starts_with(std::string_view s) const {
    return in_.substr(pos_, s.size()) == s;
  }

  void skip_ws() {
    while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void skip_until(std::string_view terminator, const char* what) {
    std::size_t found = in_.find(terminator, pos_);
    if (found == std::string_view::npos) {
      fail(std::string("unterminated ") + what);
    }
    pos_ = found + terminator.size();
  }

  // Whitespace, comments, processing instructions, DOCTYPE.
  void skip_misc() {
    while (true) {
      skip_ws();
      if (starts_with("<?")) {
        skip_until("?>", "processing instruction");
      } else if (starts_with("<!--")) {
        pos_ += 4;
        skip_until("-->", "comment");
      } else if (starts_with("<!DOCTYPE")) {
        skip_doctype();
      } else {
        return;
      }
    }
  }

  void skip_doctype() {
    pos_ += 9;
    int bracket_depth = 0;
    while (!eof()) {
      char c = peek();
      ++pos_;
      if (c == '[') ++bracket_depth;
      else if (c == ']') --bracket_depth;
      else if (c == '>' && bracket_depth == 0) return;
    }
    fail("unterminated DOCTYPE");
  }

  std::string read_name() {
    std::size_t start = pos_;
    while (!eof() && is_name_char(peek())) ++pos_;
    if (pos_ == start) fail("expected name");
    return std::string(in_.substr(start, pos_ - start));
  }

  void expect(char c) {
    if (eof() || peek() != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::string decode_entities(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] != '&') {
        out.push_back(raw[i]);
        ++i;
        continue;
      }
      std::size_t semi = raw.find(';', i);
      if (semi == std::string_view::npos || semi - i > 10) {
        fail("malformed entity reference");
      }
      std::string_view ent = raw.substr(i + 1, semi - i - 1);
      if (ent == "lt") out.push_back('<');
      else if (ent == "gt") out.push_back('>');
      else if (ent == "amp") out.push_back('&');
      else if (ent == "apos") out.push_back('\'');
      else if (ent == "quot") out.push_back('"');
      else if (!ent.empty() && ent[0] == '#') append_numeric_entity(out, ent);
      else fail("unknown entity &" + std::string(ent) + ";");
      i = semi + 1;
    }
    return out;
  }

  void append_numeric_entity(std::string& out, std::string_view ent) {
    std::int32_t cp = 0;
    bool hex = ent.size() > 1 && (ent[1] == 'x' || ent[1] == 'X');
    std::string_view digits = ent.substr(hex ? 2 : 1);
    if (digits.empty()) fail("empty numeric entity");
    for (char c : digits) {
      int v;
      if (c >= '0' && c <= '9') v = c - '0';
      else if (hex && c >= 'a' && c <= 'f') v = c - 'a' + 10;
      else if (hex && c >= 'A' && c <= 'F') v = c - 'A' + 10;
      else { fail("malformed numeric entity"); }
      cp = cp * (hex ? 16 : 10) + v;
      if (cp > 0x10FFFF) fail("numeric entity out of range");
    }
    // UTF-8 encode.
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

  std::string read_attribute_value() {
    if (eof() || (peek() != '"' && peek() != '\'')) {
      fail("expected quoted attribute value");
    }
    char quote = peek();
    ++pos_;
    std::size_t start = pos_;
    while (!eof() && peek() != quote) ++pos_;
    if (eof()) fail("unterminated attribute value");
    std::string value = decode_entities(in_.substr(start, pos_ - start));
    ++pos_;
    return value;
  }

  std::unique_ptr<XmlNode> parse_element() {
    expect('<');
    auto node = std::make_unique<XmlNode>();
    node->name = read_name();
    path_.push_back(node->name);

    while (true) {
      skip_ws();
      if (eof()) fail("unterminated start tag");
      if (peek() == '>') {
        ++pos_;
        break;
      }
      if (starts_with("/>")) {
        pos_ += 2;
        path_.pop_back();
        return node;
      }
      std::string attr_name = read_name();
      skip_ws();
      expect('=');
      skip_ws();
      node->attributes[attr_name] = read_attribute_value();
    }

    parse_content(*node);
    path_.pop_back();
    return node;
  }

  void parse_content(XmlNode& node) {
    std::string text_acc;
    // Character data belongs to node.text until the first child element;
    // after that it is the preceding sibling's tail.
    auto flush_text = [&node, &text_acc]() {
      if (node.children.empty()) {
        node.text = std::move(text_acc);
      } else {
        node.children.back()->tail = std::move(text_acc);
      }
      text_acc.clear();
    };
    while (true) {
      if (eof()) fail("unexpected end of input inside element");
      if (peek() != '<') {
        std::size_t start = pos_;
        while (!eof() && peek() != '<') ++pos_;
        text_acc += decode_entities(in_.substr(start, pos_ - start));
        continue;
      }
      if (starts_with("</")) {
        pos_ += 2;
        std::string closing = read_name();
        if (closing != node.name) {
          fail("mismatched closing tag </" + closing + ">");
        }
        skip_ws();
        expect('>');
        flush_text();
        return;
      }
      if (starts_with("<!--")) {
        pos_ += 4;
        skip_until("-->", "comment");
        continue;
      }
      if (starts_with("<![CDATA[")) {
        pos_ += 9;
        std::size_t end = in_.find("]]>", pos_);
        if (end == std::string_view::npos) fail("unterminated CDATA section");
        text_acc.append(in_.substr(pos_, end - pos_));
        pos_ = end + 3;
        continue;
      }
      if (starts_with("<?")) {
        skip_until("?>", "processing instruction");
        continue;
      }
      auto child = parse_element();
      flush_text();
      node.children.push_back(std::move(child));
    }
  }

  std::string_view in_;
  std::size_t pos_ = 0;
  std::vector<std::string> path_;
};

}  // namespace

std::unique_ptr<XmlNode> parse_xml(std::string_view input) {
  return Parser(input).parse_document();
}

}  // namespace profkit
