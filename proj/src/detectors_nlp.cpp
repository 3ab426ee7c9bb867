// detectors_nlp.cpp
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
//
// The NLP-tier detectors: implausible distractors, word repeats, logical
// cues, ambiguous information, grammatical cues, plus the option-shape
// heuristics they are built on.

#include <algorithm>
#include <set>

#include "mcqlint/detectors.hpp"
#include "mcqlint/detectors_internal.hpp"
#include "mcqlint/unicode.hpp"

namespace mcqlint::detectors {

using namespace internal;

namespace {

bool all_underscore(const std::string& s) {
  return !s.empty() && s.find_first_not_of('_') == std::string::npos;
}

bool word_token(const Token& t) {
  return t.pos != Pos::kOther && !all_underscore(t.surface);
}

std::string first_word_lower(const std::vector<Token>& tokens) {
  for (const auto& t : tokens) {
    if (word_token(t)) return ascii_lower(t.surface);
  }
  return "";
}

// A finite verb for shape purposes: auxiliaries and inflected/base verbs,
// but not -ing forms.
bool finite_verb(const Token& t) {
  if (t.pos != Pos::kVerb) return false;
  const std::string lower = ascii_lower(t.surface);
  return lower.size() < 4 || lower.substr(lower.size() - 3) != "ing";
}

}  // namespace

OptionShape option_shape(const std::vector<Token>& tokens, const TextKit& kit) {
  std::vector<const Token*> words;
  for (const auto& t : tokens) {
    if (word_token(t)) words.push_back(&t);
  }
  if (words.empty()) return OptionShape::kOther;

  bool all_num = true;
  for (const auto* t : words) {
    if (t->pos != Pos::kNum) all_num = false;
  }
  if (all_num) return OptionShape::kNumeric;

  // Subject + finite verb reads as a clause.
  for (size_t i = 0; i < words.size(); ++i) {
    if (!finite_verb(*words[i])) continue;
    for (size_t j = 0; j < i; ++j) {
      if (words[j]->pos == Pos::kPron || words[j]->pos == Pos::kNoun) {
        return OptionShape::kClause;
      }
    }
    break;
  }

  const std::string first = ascii_lower(words.front()->surface);
  if (words.front()->pos == Pos::kVerb ||
      (kit.lexicons().verb_bases.count(first) &&
       kit.lexicons().dictionary.count(first) == 0)) {
    return OptionShape::kVerbPhrase;
  }

  switch (words.back()->pos) {
    case Pos::kNoun:
    case Pos::kPron:
      return OptionShape::kNounPhrase;
    case Pos::kAdj:
      return OptionShape::kAdjPhrase;
    case Pos::kNum:
      return OptionShape::kNumeric;
    case Pos::kVerb:
      return OptionShape::kVerbPhrase;
    default:
      return OptionShape::kOther;
  }
}

std::vector<OptionShape> expected_shapes(const std::vector<Token>& stem_tokens,
                                         const TextKit& kit) {
  (void)kit;
  const std::string first = first_word_lower(stem_tokens);
  if (first == "what" || first == "which" || first == "who" ||
      first == "whom" || first == "whose" || first == "where") {
    return {OptionShape::kNounPhrase, OptionShape::kNumeric,
            OptionShape::kAdjPhrase};
  }
  if (first == "when") {
    return {OptionShape::kNumeric, OptionShape::kNounPhrase};
  }
  if (first == "how" && stem_tokens.size() > 1) {
    std::string second;
    int seen = 0;
    for (const auto& t : stem_tokens) {
      if (!word_token(t)) continue;
      if (++seen == 2) {
        second = ascii_lower(t.surface);
        break;
      }
    }
    if (second == "many" || second == "much") {
      return {OptionShape::kNumeric};
    }
  }
  return {};
}

FlawFinding detect_implausible_distractors(const Mcq& mcq,
                                           const DetectorEnv& env) {
  FlawFinding f = base_finding(Criterion::kImplausibleDistractors);
  const auto stem_tokens = env.kit.tokenize(mcq.stem);
  const auto expected = expected_shapes(stem_tokens, env.kit);
  const auto correct_lemmas = env.kit.content_lemmas(mcq.correct_text());

  for (size_t i = 0; i < mcq.options.size(); ++i) {
    if (static_cast<int>(i) == mcq.key) continue;
    const std::string& text = mcq.options[i].text;
    const double sim = env.kit.lemma_set_similarity(
        env.kit.content_lemmas(text), correct_lemmas);
    if (sim >= env.cfg.implausible_sim_threshold) continue;

    // Low similarity alone over-flags; the distractor must also fail to
    // answer the stem's expected answer type.
    if (expected.empty()) continue;
    const OptionShape shape = option_shape(env.kit.tokenize(text), env.kit);
    if (std::find(expected.begin(), expected.end(), shape) != expected.end()) {
      continue;
    }
    f.flagged = true;
    f.evidence.push_back(option_evidence(
        static_cast<int>(i), 0, text.size(),
        "similarity " + format2(sim) + " to key, off-type answer"));
  }
  return f;
}

FlawFinding detect_word_repeats(const Mcq& mcq, const DetectorEnv& env) {
  FlawFinding f = base_finding(Criterion::kWordRepeats);
  const auto stem_tokens = env.kit.content_tokens(mcq.stem);
  const auto correct_tokens = env.kit.content_tokens(mcq.correct_text());

  std::set<std::string> distractor_lemmas;
  for (size_t i = 0; i < mcq.options.size(); ++i) {
    if (static_cast<int>(i) == mcq.key) continue;
    for (const auto& t : env.kit.content_tokens(mcq.options[i].text)) {
      distractor_lemmas.insert(t.lemma);
    }
  }

  std::set<std::string> reported;
  for (const auto& st : stem_tokens) {
    if (distractor_lemmas.count(st.lemma)) continue;
    for (const auto& ct : correct_tokens) {
      if (ct.lemma != st.lemma) continue;
      if (!reported.insert(st.lemma).second) break;
      f.flagged = true;
      f.evidence.push_back(
          stem_evidence(st.begin, st.end, "repeated lemma '" + st.lemma + "'"));
      f.evidence.push_back(option_evidence(mcq.key, ct.begin, ct.end,
                                           "repeated lemma '" + st.lemma + "'"));
      break;
    }
  }
  return f;
}

FlawFinding detect_logical_cues(const Mcq& mcq, const DetectorEnv& env) {
  FlawFinding f = base_finding(Criterion::kLogicalCues);
  const auto stem_lemmas = env.kit.content_lemmas(mcq.stem);
  if (stem_lemmas.empty()) return f;

  std::vector<double> assoc(mcq.options.size(), 0.0);
  for (size_t i = 0; i < mcq.options.size(); ++i) {
    assoc[i] = env.kit.lemma_association(
        stem_lemmas, env.kit.content_lemmas(mcq.options[i].text));
  }
  double best_distractor = 0.0;
  for (size_t i = 0; i < mcq.options.size(); ++i) {
    if (static_cast<int>(i) == mcq.key) continue;
    best_distractor = std::max(best_distractor, assoc[i]);
  }
  const double correct = assoc[mcq.key];
  if (correct >= env.cfg.synonym_threshold &&
      correct - best_distractor >= env.cfg.logical_cue_margin) {
    f.flagged = true;
    f.evidence.push_back(option_evidence(
        mcq.key, 0, mcq.correct_text().size(),
        "stem association " + format2(correct) + " vs best distractor " +
            format2(best_distractor)));
  }
  return f;
}

FlawFinding detect_ambiguous_information(const Mcq& mcq,
                                         const DetectorEnv& env) {
  FlawFinding f = base_finding(Criterion::kAmbiguousInformation);
  const auto wf = env.kit.wellformedness_breakdown(mcq.stem);

  if (wf.score < env.cfg.wellformedness_threshold) {
    f.flagged = true;
    f.evidence.push_back(stem_evidence(
        0, mcq.stem.size(), "well-formedness " + format2(wf.score) +
                                " below " +
                                format2(env.cfg.wellformedness_threshold)));
  }
  if (!wf.referents_ok) {
    f.flagged = true;
    f.evidence.push_back(
        stem_evidence(0, mcq.stem.size(), "unresolved deictic reference"));
  }

  // One fragment among full-sentence options reads as unclear.
  std::vector<bool> fragment(mcq.options.size(), false);
  int fragments = 0;
  for (size_t i = 0; i < mcq.options.size(); ++i) {
    fragment[i] = option_shape(env.kit.tokenize(mcq.options[i].text),
                               env.kit) != OptionShape::kClause;
    fragments += fragment[i] ? 1 : 0;
  }
  if (fragments == 1 && mcq.options.size() >= 3) {
    for (size_t i = 0; i < mcq.options.size(); ++i) {
      if (!fragment[i]) continue;
      f.flagged = true;
      f.evidence.push_back(option_evidence(
          static_cast<int>(i), 0, mcq.options[i].text.size(),
          "fragment among full-sentence options"));
    }
  }
  return f;
}

FlawFinding detect_grammatical_cues(const Mcq& mcq, const DetectorEnv& env) {
  FlawFinding f = base_finding(Criterion::kGrammaticalCues);
  const auto stem_tokens = env.kit.tokenize(mcq.stem);

  // (a) A stem ending in "a"/"an" that agrees with the key but not with
  // every distractor points at the answer.
  const Token* last_word = nullptr;
  for (const auto& t : stem_tokens) {
    if (t.pos == Pos::kOther) continue;
    if (!t.surface.empty() &&
        t.surface.find_first_not_of('_') == std::string::npos) {
      continue;  // blank run
    }
    last_word = &t;
  }
  if (last_word != nullptr) {
    const std::string article = ascii_lower(last_word->surface);
    if (article == "a" || article == "an") {
      auto agrees = [&](const std::string& text) {
        const bool vowel = vowel_sound(leading_word(text));
        return article == "an" ? vowel : !vowel;
      };
      bool correct_ok = agrees(mcq.correct_text());
      bool distractor_off = false;
      for (size_t i = 0; i < mcq.options.size(); ++i) {
        if (static_cast<int>(i) == mcq.key) continue;
        if (!agrees(mcq.options[i].text)) distractor_off = true;
      }
      if (correct_ok && distractor_off) {
        f.flagged = true;
        f.evidence.push_back(stem_evidence(
            last_word->begin, last_word->end,
            "article '" + article + "' agrees only with the key"));
      }
    }
  }

  // (b) Mixed option signatures where only the key fits the stem's
  // expected answer type.
  const auto expected = expected_shapes(stem_tokens, env.kit);
  if (!expected.empty()) {
    std::vector<OptionShape> shapes;
    std::vector<Pos> firsts;
    for (const auto& opt : mcq.options) {
      auto tokens = env.kit.tokenize(opt.text);
      shapes.push_back(option_shape(tokens, env.kit));
      Pos first = Pos::kOther;
      for (const auto& t : tokens) {
        if (word_token(t)) {
          first = t.pos;
          break;
        }
      }
      firsts.push_back(first);
    }
    bool all_same = true;
    for (size_t i = 1; i < shapes.size(); ++i) {
      if (shapes[i] != shapes[0] || firsts[i] != firsts[0]) all_same = false;
    }
    auto fits = [&](OptionShape s) {
      return std::find(expected.begin(), expected.end(), s) != expected.end();
    };
    if (!all_same && fits(shapes[mcq.key])) {
      for (size_t i = 0; i < mcq.options.size(); ++i) {
        if (static_cast<int>(i) == mcq.key) continue;
        if (fits(shapes[i])) continue;
        f.flagged = true;
        f.evidence.push_back(option_evidence(
            static_cast<int>(i), 0, mcq.options[i].text.size(),
            "form breaks parallel structure with the stem"));
      }
    }
  }
  return f;
}

}  // namespace mcqlint::detectors
