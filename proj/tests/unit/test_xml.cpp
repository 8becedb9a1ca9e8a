// Copyright 2026 The Profkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <string>

#include "profkit/errors.hpp"
#include "profkit/xml.hpp"

using namespace profkit;

TEST_CASE("parse_xml builds the element tree") {
  auto root = parse_xml(R"(<?xml version="1.0"?>
<A id="1">
  <B>hello</B>
  <B>world</B>
  <C><D>deep</D></C>
</A>)");
  CHECK(root->name == "A");
  CHECK(root->attributes.at("id") == "1");
  REQUIRE(root->child("B") != nullptr);
  CHECK(root->child("B")->text == "hello");
  CHECK(root->children_named("B").size() == 2);
  REQUIRE(root->find_path("C/D") != nullptr);
  CHECK(root->find_path("C/D")->text == "deep");
  CHECK(root->find_path("C/X") == nullptr);
}

TEST_CASE("parse_xml decodes entities and numeric references") {
  auto root = parse_xml("<t>&lt;&gt;&amp;&quot;&apos; &#65;&#x42;</t>");
  CHECK(root->text == "<>&\"' AB");
}

TEST_CASE("parse_xml handles CDATA, comments and DOCTYPE") {
  auto root = parse_xml(
      "<!DOCTYPE PubmedArticleSet SYSTEM \"x.dtd\">"
      "<t><!-- note --><![CDATA[a < b & c]]></t>");
  CHECK(root->text == "a < b & c");
}

TEST_CASE("deep_text concatenates nested character data in order") {
  auto root = parse_xml("<t>alpha <i>beta</i> gamma</t>");
  CHECK(root->text == "alpha ");
  REQUIRE(root->children.size() == 1);
  CHECK(root->children[0]->text == "beta");
  CHECK(root->children[0]->tail == " gamma");
  CHECK(root->deep_text() == "alpha beta gamma");

  auto nested = parse_xml("<t>a<u>b<v>c</v>d</u>e<w/>f</t>");
  CHECK(nested->deep_text() == "abcdef");
}

TEST_CASE("parse_xml rejects malformed input with a path in the message") {
  CHECK_THROWS_AS(parse_xml("<a><b></a>"), DataError);
  CHECK_THROWS_AS(parse_xml("<a>"), DataError);
  CHECK_THROWS_AS(parse_xml("no markup"), DataError);
  CHECK_THROWS_AS(parse_xml(""), DataError);
  CHECK_THROWS_AS(parse_xml("<a></a><b></b>"), DataError);
  try {
    parse_xml("<Outer><Inner>");
  } catch (const DataError& e) {
    std::string message = e.what();
    CHECK(message.find("Outer/Inner") != std::string::npos);
  }
}

TEST_CASE("self-closing elements and attribute quoting variants") {
  auto root = parse_xml("<a><b x='1'/><c y=\"two\"/></a>");
  CHECK(root->child("b")->attributes.at("x") == "1");
  CHECK(root->child("c")->attributes.at("y") == "two");
}
