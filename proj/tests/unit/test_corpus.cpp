// Copyright 2026 The Profkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <string>

#include "profkit/corpus.hpp"
#include "profkit/errors.hpp"

using namespace profkit;

namespace {

Corpus sample_corpus() {
  Corpus c;
  Researcher r;
  r.id = "r1";
  r.name = "Alice Chen";
  r.affiliation = "Stanford University";
  r.human_profile = "Dr. Chen studies machine learning.";
  c.researchers.push_back(r);

  PublicationRecord p;
  p.pmid = "12345";
  p.title = "A study.";
  p.abstract_text = "We studied things.";
  p.mesh_terms = {"Machine Learning"};
  p.authors = {{"Chen", "Alice"}, {"Smith", "John"}};
  p.year = 2020;
  c.publications.push_back(p);

  ProfileDoc d;
  d.researcher_id = "r1";
  d.variant = Variant::MeshGen;
  d.text = "Generated profile.";
  d.created_at = "1970-01-01T00:00:00Z";
  c.profiles.push_back(d);
  return c;
}

}  // namespace

TEST_CASE("variant names round-trip") {
  for (Variant v : {Variant::Human, Variant::MeshGen, Variant::AbstractGen,
                    Variant::Paraphrase}) {
    CHECK(parse_variant(variant_name(v)) == v);
  }
  CHECK(std::string(variant_name(Variant::Human)) == "Human");
  CHECK(std::string(variant_name(Variant::MeshGen)) == "MeshGen");
  CHECK(std::string(variant_name(Variant::AbstractGen)) == "AbstractGen");
  CHECK(std::string(variant_name(Variant::Paraphrase)) == "Paraphrase");
  CHECK_THROWS_AS(parse_variant("mesh"), DataError);
}

TEST_CASE("corpus serialization round-trips and is byte-stable") {
  Corpus c = sample_corpus();
  std::string once = serialize_corpus(c);
  Corpus back = parse_corpus(once);
  CHECK(back == c);
  CHECK(serialize_corpus(back) == once);
}

TEST_CASE("parse_corpus validates records") {
  CHECK_THROWS_AS(parse_corpus(R"({"kind":"mystery"})"), DataError);
  CHECK_THROWS_AS(parse_corpus(R"({"no_kind":1})"), DataError);
  CHECK_THROWS_AS(parse_corpus("not json"), DataError);
  // Missing required publication fields.
  CHECK_THROWS_AS(parse_corpus(R"({"kind":"publication","pmid":"1"})"),
                  DataError);
  // Non-numeric pmid.
  CHECK_THROWS_AS(
      parse_corpus(
          R"({"kind":"publication","pmid":"x1","title":"t","abstract":"a","mesh_terms":[],"authors":[],"year":2020})"),
      DataError);
  // Unknown variant label.
  CHECK_THROWS_AS(
      parse_corpus(
          R"({"kind":"profile","researcher_id":"r1","variant":"Robot","text":"x","created_at":"t"})"),
      DataError);
  // Blank human profile.
  CHECK_THROWS_AS(
      parse_corpus(
          R"({"kind":"researcher","id":"r1","name":"N","affiliation":"A","human_profile":"  "})"),
      DataError);
}

TEST_CASE("parse_corpus skips blank lines and reports line numbers") {
  std::string jsonl = R"({"kind":"researcher","id":"r1","name":"N","affiliation":"A"}

{"kind":"researcher","id":"r2","name":"M","affiliation":"B"}
)";
  Corpus c = parse_corpus(jsonl);
  CHECK(c.researchers.size() == 2);

  try {
    parse_corpus(
        "{\"kind\":\"researcher\",\"id\":\"r1\",\"name\":\"N\","
        "\"affiliation\":\"A\"}\n{bad json}\n",
        "input.jsonl");
    FAIL("expected DataError");
  } catch (const DataError& e) {
    std::string message = e.what();
    CHECK(message.find("input.jsonl") != std::string::npos);
    CHECK(message.find("2") != std::string::npos);
  }
}

TEST_CASE("empty corpus serializes to an empty document") {
  Corpus empty;
  CHECK(serialize_corpus(empty) == "");
  CHECK(parse_corpus("") == empty);
}
