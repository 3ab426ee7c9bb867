// test_textkit.cpp
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

#include <cmath>

#include "mcqlint/textkit.hpp"
#include "mcqlint/unicode.hpp"
#include "support/testenv.hpp"

using namespace mcqlint;
using testenv::kit;

// Reference similarity for the two particle options, computed by
// tools/make_data.py directly from the shipped vector file.
static constexpr double kParticleOptionSim = 0.8750475026;

TEST_CASE("tokenize basic examples") {
  auto tokens = kit().tokenize("What is protons?");
  REQUIRE(tokens.size() == 4);
  CHECK(tokens[0].surface == "What");
  CHECK(tokens[0].pos == Pos::kPron);
  CHECK(tokens[1].pos == Pos::kVerb);
  CHECK(tokens[2].surface == "protons");
  CHECK(tokens[2].pos == Pos::kNoun);
  CHECK(tokens[2].lemma == "proton");
  CHECK(tokens[3].pos == Pos::kOther);

  CHECK(kit().tokenize("").empty());

  auto pi = kit().tokenize("3.14 is \xCF\x80");
  REQUIRE(!pi.empty());
  CHECK(pi[0].surface == "3.14");
  CHECK(pi[0].pos == Pos::kNum);
}

TEST_CASE("tokenize spans reconstruct the input") {
  const std::string text = "The mitochondria (a 3.14% case, my_var) -- done?";
  auto tokens = kit().tokenize(text);
  size_t prev_end = 0;
  std::string rebuilt;
  for (const auto& t : tokens) {
    REQUIRE(t.begin >= prev_end);
    REQUIRE(t.end > t.begin);
    REQUIRE(t.end <= text.size());
    // The gap between tokens is all whitespace.
    for (size_t i = prev_end; i < t.begin; ++i) {
      CHECK(std::isspace(static_cast<unsigned char>(text[i])));
    }
    CHECK(text.substr(t.begin, t.end - t.begin) == t.surface);
    rebuilt += text.substr(prev_end, t.end - prev_end);
    prev_end = t.end;
  }
  rebuilt += text.substr(prev_end);
  CHECK(rebuilt == text);
}

TEST_CASE("identifiers and blank runs tokenize whole") {
  auto tokens = kit().tokenize("What does my_function return? ____ here");
  bool found_identifier = false, found_blank = false;
  for (const auto& t : tokens) {
    if (t.surface == "my_function") found_identifier = true;
    if (t.surface == "____") {
      found_blank = true;
      CHECK(t.pos == Pos::kOther);
    }
  }
  CHECK(found_identifier);
  CHECK(found_blank);
}

TEST_CASE("lemmatize examples") {
  CHECK(kit().lemmatize("protons", Pos::kNoun) == "proton");
  CHECK(kit().lemmatize("discovered", Pos::kVerb) == "discover");
  CHECK(kit().lemmatize("is", Pos::kVerb) == "be");
  CHECK(kit().lemmatize("children", Pos::kNoun) == "child");
  CHECK(kit().lemmatize("making", Pos::kVerb) == "make");
  CHECK(kit().lemmatize("running", Pos::kVerb) == "run");
  CHECK(kit().lemmatize("classes", Pos::kNoun) == "class");
  CHECK(kit().lemmatize("diseases", Pos::kNoun) == "disease");
  CHECK(kit().lemmatize("gas", Pos::kNoun) == "gas");
  // Unknown words pass through lowercased.
  CHECK(kit().lemmatize("Blorgs", Pos::kNoun) == "blorg");
  CHECK(kit().lemmatize("ZZZZQQ", Pos::kNoun) == "zzzzqq");
}

TEST_CASE("lemmatize is idempotent on dictionary words") {
  for (const char* w : {"proton", "discover", "be", "child", "make", "class",
                        "particle", "charge", "good"}) {
    const std::string lemma = kit().lemmatize(w, Pos::kNoun);
    CHECK(kit().lemmatize(lemma, Pos::kNoun) == lemma);
  }
}

TEST_CASE("content_lemmas examples") {
  CHECK(kit().content_lemmas("What is protons?") ==
        std::vector<std::string>{"proton"});
  CHECK(kit().content_lemmas("the of a an").empty());
  CHECK(kit().content_lemmas("sum the number of protons and neutrons") ==
        std::vector<std::string>{"sum", "number", "proton", "neutron"});
}

TEST_CASE("content_lemmas is case-invariant") {
  const std::string text = "Sum The NUMBER of Protons AND Neutrons";
  CHECK(kit().content_lemmas(text) ==
        kit().content_lemmas("sum the number of protons and neutrons"));
}

TEST_CASE("text_similarity frozen reference value") {
  const double sim = kit().text_similarity(
      "positively charged particles",
      "negatively charged subatomic particles");
  CHECK(sim == doctest::Approx(kParticleOptionSim).epsilon(1e-6));
}

TEST_CASE("text_similarity self and out-of-vocabulary rules") {
  CHECK(kit().text_similarity("the proton", "the proton") ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(kit().text_similarity("zzzzqq", "proton") == 0.0);
  CHECK(kit().text_similarity("", "proton") == 0.0);
}

TEST_CASE("text_similarity is symmetric") {
  const char* texts[] = {
      "positively charged particles",
      "he discovered the charge of electron",
      "sum the number of protons and neutrons",
      "the capital of France",
  };
  for (const char* a : texts) {
    for (const char* b : texts) {
      CHECK(std::abs(kit().text_similarity(a, b) -
                     kit().text_similarity(b, a)) < 1e-9);
    }
  }
}

TEST_CASE("wellformedness heuristic") {
  CHECK(kit().wellformedness("What is the capital of France?") >= 0.8);
  CHECK(kit().wellformedness("") == 0.0);
  CHECK(kit().wellformedness("The mitochondria") <= 0.4);

  auto wf = kit().wellformedness_breakdown("It is which?");
  CHECK_FALSE(wf.referents_ok);

  // A noun before the pronoun resolves the reference.
  auto ok = kit().wellformedness_breakdown(
      "The reaction stops. It is which of these?");
  CHECK(ok.referents_ok);
}

TEST_CASE("nfc composition of combining marks") {
  // "cafe" + combining acute accent composes to the precomposed form.
  const std::string decomposed = "cafe\xCC\x81";
  const std::string composed = nfc_compose(decomposed);
  CHECK(composed == "caf\xC3\xA9");
  // Text without marks passes through untouched.
  CHECK(nfc_compose("plain text") == "plain text");
}

TEST_CASE("embedding table lookups are case-insensitive") {
  const auto& table = kit().vectors();
  REQUIRE(table.lookup("proton") != nullptr);
  CHECK(table.lookup("PROTON") == table.lookup("proton"));
  CHECK(table.lookup("zzzzqq-not-a-word") == nullptr);
  CHECK(table.dimension() == 64);
}
