// Copyright 2026 The Profkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <string>
#include <vector>

#include "profkit/text.hpp"
#include "profkit/util.hpp"

using namespace profkit;

namespace {
const std::string kFixtures = PROFKIT_FIXTURES_DIR;
}

TEST_CASE("tokenize basics") {
  CHECK(tokenize("Hello, World!") == std::vector<std::string>{"hello", "world"});
  CHECK(tokenize("") == std::vector<std::string>{});
  CHECK(tokenize("   \t\n ") == std::vector<std::string>{});
  CHECK(tokenize("x") == std::vector<std::string>{"x"});
  CHECK(tokenize("TGF-beta") == std::vector<std::string>{"tgf", "beta"});
  CHECK(tokenize("3.5x") == std::vector<std::string>{"3", "5x"});
  CHECK(tokenize("don't") == std::vector<std::string>{"don", "t"});
}

TEST_CASE("tokenize folds Latin-1, Greek and Cyrillic") {
  CHECK(tokenize("Álvarez") == std::vector<std::string>{"álvarez"});
  CHECK(tokenize("MÜLLER") == std::vector<std::string>{"müller"});
  CHECK(tokenize("ΒΗΤΑ βήτα") == std::vector<std::string>{"βητα", "βήτα"});
  CHECK(tokenize("МОСКВА") == std::vector<std::string>{"москва"});
}

TEST_CASE("tokenize treats invalid UTF-8 as separators") {
  std::string bad = "ab\xFF\xFE"
                    "cd";
  CHECK(tokenize(bad) == std::vector<std::string>{"ab", "cd"});
  // Truncated multi-byte sequence at end of input.
  std::string trunc = "xy\xC3";
  CHECK(tokenize(trunc) == std::vector<std::string>{"xy"});
}

TEST_CASE("tokenize matches the frozen paragraph fixture") {
  std::string text = read_file(kFixtures + "/text/paragraph.txt");
  std::vector<std::string> expected;
  for (const std::string& line :
       split(read_file(kFixtures + "/text/paragraph.tokens.txt"), '\n')) {
    if (!line.empty()) expected.push_back(line);
  }
  std::vector<std::string> actual = tokenize(text);
  REQUIRE(actual.size() == expected.size());
  for (std::size_t i = 0; i < actual.size(); ++i) {
    CAPTURE(i);
    CHECK(actual[i] == expected[i]);
  }
}

TEST_CASE("stoplist filters and ignores comments") {
  Stoplist list({"the", "and", "of"});
  CHECK(list.contains("the"));
  CHECK_FALSE(list.contains("gene"));
  std::vector<std::string> tokens{"the", "gene", "and", "protein"};
  CHECK(remove_stopwords(tokens, list) ==
        std::vector<std::string>{"gene", "protein"});
}

TEST_CASE("porter stemmer classic pairs") {
  // Examples from the algorithm's published step tables.
  const std::pair<const char*, const char*> cases[] = {
      {"caresses", "caress"}, {"ponies", "poni"},       {"ties", "ti"},
      {"caress", "caress"},   {"cats", "cat"},          {"feed", "feed"},
      {"agreed", "agre"},     {"plastered", "plaster"}, {"bled", "bled"},
      {"motoring", "motor"},  {"sing", "sing"},         {"conflated", "conflat"},
      {"troubled", "troubl"}, {"sized", "size"},        {"hopping", "hop"},
      {"tanned", "tan"},      {"falling", "fall"},      {"hissing", "hiss"},
      {"fizzed", "fizz"},     {"failing", "fail"},      {"filing", "file"},
      {"happy", "happi"},     {"sky", "sky"},           {"relational", "relat"},
      {"conditional", "condit"}, {"rational", "ration"},
      {"digitizer", "digit"}, {"operator", "oper"},     {"feudalism", "feudal"},
      {"decisiveness", "decis"}, {"hopefulness", "hope"},
      {"callousness", "callous"}, {"triplicate", "triplic"},
      {"formative", "form"},  {"formalize", "formal"},  {"electrical", "electr"},
      {"hopeful", "hope"},    {"goodness", "good"},     {"revival", "reviv"},
      {"allowance", "allow"}, {"inference", "infer"},   {"airliner", "airlin"},
      {"gyroscopic", "gyroscop"}, {"adjustable", "adjust"},
      {"defensible", "defens"}, {"irritant", "irrit"},  {"replacement", "replac"},
      {"adjustment", "adjust"}, {"dependent", "depend"}, {"adoption", "adopt"},
      {"communism", "commun"}, {"activate", "activ"},   {"homologous", "homolog"},
      {"effective", "effect"}, {"probate", "probat"},   {"rate", "rate"},
      {"cease", "ceas"},      {"controlling", "control"}, {"rolling", "roll"},
  };
  for (const auto& [input, expected] : cases) {
    CAPTURE(input);
    CHECK(stem(input) == expected);
  }
}

TEST_CASE("stemmer leaves short and non-ASCII tokens unchanged") {
  CHECK(stem("at") == "at");
  CHECK(stem("is") == "is");
  CHECK(stem("βήτα") == "βήτα");
  CHECK(stem("café") == "café");
}
