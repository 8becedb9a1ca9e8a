// Copyright 2026 The Profkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <string>
#include <vector>

#include "profkit/conllu.hpp"
#include "profkit/errors.hpp"

using namespace profkit;

namespace {

const std::string kFixtures = PROFKIT_FIXTURES_DIR;

std::string error_message(const std::string& text) {
  try {
    parse_conllu(text, "in.conllu");
    return "";
  } catch (const DataError& e) {
    return e.what();
  }
}

}  // namespace

TEST_CASE("parse_conllu reads the two-sentence fixture") {
  auto sentences = load_conllu(kFixtures + "/conllu/profile_a.conllu");
  REQUIRE(sentences.size() == 2);

  const ParsedSentence& s0 = sentences[0];
  REQUIRE(s0.tokens.size() == 5);
  CHECK(s0.root_index == 1);
  CHECK(s0.tokens[0].form == "She");
  CHECK(s0.tokens[0].lemma == "she");
  CHECK(s0.tokens[0].upos == "PRON");
  CHECK(s0.tokens[0].head == 2);
  CHECK(s0.tokens[0].deprel == "nsubj");
  CHECK(s0.tokens[1].head == 0);
  CHECK(s0.tokens[1].deprel == "root");

  const ParsedSentence& s1 = sentences[1];
  REQUIRE(s1.tokens.size() == 7);
  CHECK(s1.root_index == 2);
  CHECK(s1.tokens[4].upos == "ADP");
  CHECK(s1.tokens[4].head == 6);
}

TEST_CASE("parse_conllu skips comments, ranges and empty nodes") {
  std::string text =
      "# sent_id = 1\n"
      "1-2\tdon't\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tdo\tdo\tAUX\tVBP\t_\t0\troot\t_\t_\n"
      "1.1\telided\telide\tVERB\tVB\t_\t_\t_\t_\t_\n"
      "2\tnot\tnot\tPART\tRB\t_\t1\tadvmod\t_\t_\n";
  auto sentences = parse_conllu(text);
  REQUIRE(sentences.size() == 1);
  REQUIRE(sentences[0].tokens.size() == 2);
  CHECK(sentences[0].tokens[0].form == "do");
  CHECK(sentences[0].tokens[1].form == "not");
}

TEST_CASE("parse_conllu flushes a trailing sentence and handles CRLF") {
  auto sentences =
      parse_conllu("1\ta\ta\tNOUN\tNN\t_\t0\troot\t_\t_\r\n"
                   "2\tb\tb\tNOUN\tNN\t_\t1\tdep\t_\t_");
  REQUIRE(sentences.size() == 1);
  CHECK(sentences[0].tokens.size() == 2);
  CHECK(sentences[0].tokens[0].form == "a");  // no \r residue
  CHECK(parse_conllu("").empty());
  CHECK(parse_conllu("# only a comment\n").empty());
}

TEST_CASE("parse_conllu rejects malformed input with line numbers") {
  // Head cycle: fixture tokens 2 and 3 point at each other.
  try {
    load_conllu(kFixtures + "/conllu/cycle.conllu");
    FAIL("expected DataError");
  } catch (const DataError& e) {
    std::string message = e.what();
    CHECK(message.find("cycle.conllu") != std::string::npos);
    CHECK(message.find("line 3") != std::string::npos);
    CHECK(message.find("head cycle") != std::string::npos);
  }

  try {
    load_conllu(kFixtures + "/conllu/multiroot.conllu");
    FAIL("expected DataError");
  } catch (const DataError& e) {
    std::string message = e.what();
    CHECK(message.find("2 roots") != std::string::npos);
  }

  CHECK(error_message("1\ta\ta\tNOUN\tNN\t_\t5\tdep\t_\t_\n")
            .find("head 5 out of range") != std::string::npos);
  CHECK(error_message("1\ta\ta\tNOUN\tNN\t_\t0\n")
            .find("expected 10 tab-separated columns, got 7") !=
        std::string::npos);
  CHECK(error_message("1\ta\ta\tNOUN\tNN\t_\tx\tdep\t_\t_\n")
            .find("malformed head") != std::string::npos);
  CHECK(error_message("2\ta\ta\tNOUN\tNN\t_\t0\troot\t_\t_\n")
            .find("out of sequence") != std::string::npos);
  CHECK(error_message("abc\ta\ta\tNOUN\tNN\t_\t0\troot\t_\t_\n")
            .find("malformed token id") != std::string::npos);
  // All of the above name the origin and a line number.
  CHECK(error_message("1\ta\ta\tNOUN\tNN\t_\tx\tdep\t_\t_\n")
            .find("in.conllu line 1") != std::string::npos);
}

TEST_CASE("serialize_conllu round-trips parsed sentences") {
  auto sentences = load_conllu(kFixtures + "/conllu/profile_a.conllu");
  std::string serialized = serialize_conllu(sentences);
  CHECK(parse_conllu(serialized) == sentences);
  // Stable output: serializing again gives the same bytes.
  CHECK(serialize_conllu(parse_conllu(serialized)) == serialized);
}

TEST_CASE("load_conllu names the file in errors") {
  CHECK_THROWS_AS(load_conllu(kFixtures + "/conllu/missing.conllu"), DataError);
}
