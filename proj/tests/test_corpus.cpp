// test_corpus.cpp
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

#include <doctest.h>

#include "mcqlint/corpus.hpp"
#include "support/testenv.hpp"

using namespace mcqlint;

namespace {

const char* kChemLine =
    R"({"id":"q1","domain":"chemistry","stem":"What is protons?","options":)"
    R"(["positively charged particles","sum the number of protons and neutrons",)"
    R"("negatively charged subatomic particles","he discovered the charge of electron"],"key":0})";

std::string gold_row(const std::string& id,
                     const std::vector<std::string>& flagged) {
  std::string row = id;
  for (auto c : all_criteria()) {
    bool on = false;
    for (const auto& name : flagged) on = on || name == criterion_name(c);
    row += on ? ",1" : ",0";
  }
  return row;
}

}  // namespace

TEST_CASE("parse_jsonl accepts the chemistry sample line") {
  Dataset ds = parse_jsonl_text(kChemLine, "inline");
  REQUIRE(ds.questions.size() == 1);
  const Mcq& q = ds.questions[0];
  CHECK(q.id == "q1");
  CHECK(q.options.size() == 4);
  CHECK(q.key == 0);
  CHECK(q.options[0].is_correct);
  CHECK_FALSE(q.options[1].is_correct);
  CHECK(q.correct_text() == "positively charged particles");
}

TEST_CASE("parse_jsonl rejects invariant violations with line context") {
  CHECK_THROWS_WITH_AS(
      parse_jsonl_text(R"({"id":"q1","domain":"d","stem":"S?","options":["only"],"key":0})",
                       "bad"),
      doctest::Contains("options out of range"), ValidationError);
  CHECK_THROWS_WITH_AS(
      parse_jsonl_text(
          R"({"id":"q1","domain":"d","stem":"S?","options":["a","b","c","d"],"key":4})",
          "bad"),
      doctest::Contains("key out of range"), ValidationError);
  CHECK_THROWS_AS(parse_jsonl_text("{not json", "bad"), ParseError);
  // Line numbers survive into the message.
  try {
    parse_jsonl_text(std::string(kChemLine) + "\n{broken", "file.jsonl");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("file.jsonl:2") != std::string::npos);
  }
}

TEST_CASE("parse_jsonl accepts letter answers and metadata") {
  Dataset ds = parse_jsonl_text(
      R"({"id":"q2","domain":"d","stem":"Pick one?","options":["x","y","z"],)"
      R"("answer":"B","metadata":{"source":"unit"}})",
      "inline");
  CHECK(ds.questions[0].key == 1);
  CHECK(ds.questions[0].metadata.at("source") == "unit");
}

TEST_CASE("parse_jsonl rejects duplicate ids") {
  std::string two = std::string(kChemLine) + "\n" + kChemLine;
  CHECK_THROWS_WITH_AS(parse_jsonl_text(two, "dup"),
                       doctest::Contains("duplicate id"), ValidationError);
}

TEST_CASE("jsonl round-trips") {
  Dataset ds = parse_jsonl_text(
      std::string(kChemLine) + "\n" +
          R"({"id":"q2","domain":"stats","stem":"Café question?","options":["a","b"],"key":1,"metadata":{"k":"v"}})",
      "inline");
  Dataset again = parse_jsonl_text(serialize_jsonl(ds), "roundtrip");
  CHECK(ds == again);
}

TEST_CASE("NFC applied at parse time") {
  // Stem uses e + combining acute; parsing composes it.
  Dataset ds = parse_jsonl_text(
      "{\"id\":\"q1\",\"domain\":\"d\",\"stem\":\"Cafe\\u0301?\","
      "\"options\":[\"a\",\"b\"],\"key\":0}",
      "inline");
  CHECK(ds.questions[0].stem == "Caf\xC3\xA9?");
}

TEST_CASE("gold csv parses canonical rows") {
  std::string csv = gold_csv_header() + "\n" +
                    gold_row("q1", {"implausible_distractors", "logical_cues",
                                    "grammatical_cues"}) +
                    "\n" + gold_row("q2", {}) + "\n";
  auto gold = parse_gold_csv_text(csv, "inline");
  REQUIRE(gold.size() == 2);
  CHECK(gold[0].flaw_count() == 3);
  CHECK(gold[0].flags[index_of(Criterion::kImplausibleDistractors)]);
  CHECK(gold[0].flags[index_of(Criterion::kLogicalCues)]);
  CHECK(gold[0].flags[index_of(Criterion::kGrammaticalCues)]);
  CHECK_FALSE(gold[0].flags[index_of(Criterion::kTrueOrFalse)]);
  CHECK(gold[1].flaw_count() == 0);
  CHECK(gold[1].acceptable());
}

TEST_CASE("gold csv rejects bad headers and non-binary cells") {
  CHECK_THROWS_AS(parse_gold_csv_text("question_id,foo\nq1,0\n", "inline"),
                  ParseError);
  std::string bad = gold_csv_header() + "\n" + gold_row("q1", {});
  bad[gold_csv_header().size() + 4] = '2';  // first flag cell -> "2"
  CHECK_THROWS_WITH_AS(parse_gold_csv_text(bad, "inline"),
                       doctest::Contains("must be 0 or 1"), ValidationError);
}

TEST_CASE("gold csv round-trips") {
  std::string csv = gold_csv_header() + "\n" +
                    gold_row("q1", {"true_or_false"}) + "\n" +
                    gold_row("q2", {"vague_terms", "absolute_terms"}) + "\n";
  auto gold = parse_gold_csv_text(csv, "inline");
  CHECK(serialize_gold_csv(gold) == csv);
}

TEST_CASE("join attaches gold and reports orphans") {
  Dataset ds = parse_jsonl_text(kChemLine, "inline");
  std::vector<GoldLabels> gold;
  GoldLabels g;
  g.question_id = "q1";
  gold.push_back(g);

  Dataset joined = join(ds, gold);
  CHECK(joined.has_gold());
  CHECK(joined.find_gold("q1") != nullptr);

  GoldLabels orphan;
  orphan.question_id = "qX";
  CHECK_THROWS_WITH_AS(join(ds, {orphan}), doctest::Contains("qX"), JoinError);

  Dataset lint_only = join(ds, {});
  CHECK_FALSE(lint_only.has_gold());
}
