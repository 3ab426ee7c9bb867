// detectors_llm.cpp
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
// The verification-tier detectors. Each one first looks for a cheap
// lexical/pattern candidate; only candidates generate gate traffic. With
// the gate disabled a candidate flags directly, which is the rule-only
// offline mode.

#include <algorithm>
#include <cmath>
#include <set>

#include "mcqlint/detectors.hpp"
#include "mcqlint/detectors_internal.hpp"
#include "mcqlint/unicode.hpp"

namespace mcqlint::detectors {

using namespace internal;

namespace {

bool gate_available(const DetectorEnv& env) {
  return env.cfg.llm_enabled && env.gate != nullptr && !env.gate->disabled();
}

// Shared candidate resolution: verify with the gate when available, flag
// directly otherwise. Gate failures mark the finding unavailable rather
// than silently returning false.
void resolve_candidate(FlawFinding& f, Criterion criterion, const Mcq& mcq,
                       const DetectorEnv& env, const std::string& evidence_text,
                       std::vector<Evidence> evidence) {
  if (gate_available(env)) {
    f.llm_consulted = true;
    try {
      f.flagged = env.gate->verify(criterion, mcq, evidence_text);
    } catch (const llmgate::GateError& e) {
      f.status = FindingStatus::kUnavailable;
      f.note = e.what();
      return;
    }
  } else {
    f.flagged = true;
  }
  if (f.flagged) f.evidence = std::move(evidence);
}

std::string location_name(const Evidence& ev) {
  if (ev.where == EvidenceLocation::kStem) return "stem";
  return "option " + std::string(1, static_cast<char>('A' + ev.option_index));
}

}  // namespace

FlawFinding detect_absolute_terms(const Mcq& mcq, const DetectorEnv& env) {
  FlawFinding f = base_finding(Criterion::kAbsoluteTerms);
  const auto& lex = env.kit.lexicons();

  std::vector<Evidence> hits;
  for (const auto& term : lex.absolute_terms) {
    for (const auto& [begin, end] : whole_word_spans(mcq.stem, term)) {
      hits.push_back(stem_evidence(begin, end, "absolute term '" + term + "'"));
    }
  }
  for (size_t i = 0; i < mcq.options.size(); ++i) {
    // "all of the above"-style options belong to their own criteria.
    const std::string norm = normalize_phrase(mcq.options[i].text);
    bool phrase_option = false;
    for (const auto& p : lex.noa_phrases) phrase_option |= norm == p;
    for (const auto& p : lex.aota_phrases) phrase_option |= norm == p;
    if (phrase_option) continue;
    for (const auto& term : lex.absolute_terms) {
      for (const auto& [begin, end] :
           whole_word_spans(mcq.options[i].text, term)) {
        hits.push_back(option_evidence(static_cast<int>(i), begin, end,
                                       "absolute term '" + term + "'"));
      }
    }
  }
  if (hits.empty()) return f;

  std::string summary;
  for (const auto& ev : hits) {
    if (!summary.empty()) summary += "; ";
    summary += ev.note + " in " + location_name(ev);
  }
  resolve_candidate(f, Criterion::kAbsoluteTerms, mcq, env, summary,
                    std::move(hits));
  return f;
}

FlawFinding detect_more_than_one_correct(const Mcq& mcq,
                                         const DetectorEnv& env) {
  FlawFinding f = base_finding(Criterion::kMoreThanOneCorrect);
  const std::string stem_lower = ascii_lower(mcq.stem);

  // (a) Select-all phrasing flags outright; no verification needed.
  static const char* kSelectAll[] = {
      "select all that apply", "choose all that apply", "check all that apply",
      "select all", "choose all", "mark all that apply",
      "which of the following are",
  };
  for (const char* phrase : kSelectAll) {
    size_t pos = stem_lower.find(phrase);
    if (pos == std::string::npos) continue;
    f.flagged = true;
    f.evidence.push_back(stem_evidence(pos, pos + std::string_view(phrase).size(),
                                       "select-all phrasing"));
    return f;
  }

  // (b)/(c) Duplicate and near-duplicate option pairs. Strong pairs win;
  // among equals keep the most similar one.
  double best_pair_sim = 0.0;
  bool strong = false;
  std::pair<int, int> pair{-1, -1};
  for (size_t i = 0; i < mcq.options.size(); ++i) {
    for (size_t j = i + 1; j < mcq.options.size(); ++j) {
      const double edit =
          edit_similarity(mcq.options[i].text, mcq.options[j].text);
      const double embed = env.kit.text_similarity(mcq.options[i].text,
                                                   mcq.options[j].text);
      const double sim = std::max(edit, embed);
      const bool is_strong = edit >= env.cfg.near_duplicate_edit ||
                             embed >= env.cfg.near_duplicate_embedding;
      if ((is_strong && !strong) ||
          (is_strong == strong && sim > best_pair_sim)) {
        strong = strong || is_strong;
        best_pair_sim = sim;
        pair = {static_cast<int>(i), static_cast<int>(j)};
      }
    }
  }

  const bool weak = !strong && best_pair_sim >= env.cfg.multi_correct_similarity;
  if (!strong && !weak) return f;
  if (weak && !gate_available(env)) return f;  // weak signals need the gate

  std::vector<Evidence> evidence;
  evidence.push_back(option_evidence(pair.first, 0,
                                     mcq.options[pair.first].text.size(),
                                     "near-duplicate pair"));
  evidence.push_back(option_evidence(pair.second, 0,
                                     mcq.options[pair.second].text.size(),
                                     "near-duplicate pair"));

  std::string context = "options " +
                        std::string(1, static_cast<char>('A' + pair.first)) +
                        " and " +
                        std::string(1, static_cast<char>('A' + pair.second)) +
                        " look interchangeable (similarity " +
                        format2(best_pair_sim) + ")";
  if (gate_available(env)) {
    // Independent answering round first; its outcome goes into the
    // verification prompt.
    f.llm_consulted = true;
    try {
      auto answer = env.gate->ask_answer(mcq);
      if (answer) {
        context += "; the model answered " +
                   std::string(1, static_cast<char>('A' + *answer)) +
                   ", the key is " +
                   std::string(1, static_cast<char>('A' + mcq.key));
      } else {
        context += "; the model abstained from answering";
      }
      f.flagged = env.gate->verify(Criterion::kMoreThanOneCorrect, mcq, context);
    } catch (const llmgate::GateError& e) {
      f.status = FindingStatus::kUnavailable;
      f.note = e.what();
      return f;
    }
    if (f.flagged) f.evidence = std::move(evidence);
  } else {
    f.flagged = true;
    f.evidence = std::move(evidence);
  }
  return f;
}

namespace {

// Combination-pattern test for K-type options: label tokens (A-E, 1-5,
// roman numerals) joined by connectors, e.g. "A and C", "1, 2 and 3",
// "B only".
bool combination_option(const std::string& text) {
  static const std::set<std::string> connectors = {
      "and", "or", "both", "only", "neither", "nor", "all", "of", "them",
      "none", "plus", "except"};
  int labels = 0;
  bool has_only = false;
  int words = 0;
  std::string word;
  auto classify = [&](const std::string& w) -> bool {
    ++words;
    if (w.size() == 1 && w[0] >= 'a' && w[0] <= 'e') {
      ++labels;
      return true;
    }
    if (w.size() == 1 && w[0] >= '1' && w[0] <= '5') {
      ++labels;
      return true;
    }
    if (w == "i" || w == "ii" || w == "iii" || w == "iv" || w == "v") {
      ++labels;
      return true;
    }
    if (connectors.count(w)) {
      has_only = has_only || w == "only";
      return true;
    }
    return false;
  };
  const std::string lower = ascii_lower(text);
  for (size_t i = 0; i <= lower.size(); ++i) {
    char c = i < lower.size() ? lower[i] : ' ';
    if (is_ascii_alpha(c) || is_ascii_digit(c)) {
      word += c;
    } else if (!word.empty()) {
      if (!classify(word)) return false;
      word.clear();
    }
  }
  if (words == 0) return false;
  return labels >= 2 || (labels == 1 && has_only);
}

std::vector<std::string> option_components(const std::string& text) {
  // Split on commas, semicolons, slashes, " and ", " or ".
  std::string lower = ascii_lower(text);
  std::vector<std::string> parts;
  std::string cur;
  size_t i = 0;
  auto flush = [&] {
    // Trim and drop edge punctuation.
    size_t b = 0, e = cur.size();
    while (b < e && !is_ascii_alpha(cur[b]) && !is_ascii_digit(cur[b])) ++b;
    while (e > b && !is_ascii_alpha(cur[e - 1]) && !is_ascii_digit(cur[e - 1]))
      --e;
    if (e > b) parts.push_back(cur.substr(b, e - b));
    cur.clear();
  };
  while (i < lower.size()) {
    char c = lower[i];
    if (c == ',' || c == ';' || c == '/') {
      flush();
      ++i;
      continue;
    }
    if (c == ' ' &&
        (lower.compare(i, 5, " and ") == 0 || lower.compare(i, 4, " or ") == 0)) {
      flush();
      i += lower.compare(i, 5, " and ") == 0 ? 5 : 4;
      continue;
    }
    cur += c;
    ++i;
  }
  flush();
  return parts;
}

}  // namespace

FlawFinding detect_complex_k_type(const Mcq& mcq, const DetectorEnv& env) {
  FlawFinding f = base_finding(Criterion::kComplexKType);

  std::vector<Evidence> evidence;
  int matching = 0;
  for (size_t i = 0; i < mcq.options.size(); ++i) {
    if (combination_option(mcq.options[i].text)) {
      ++matching;
      evidence.push_back(option_evidence(static_cast<int>(i), 0,
                                         mcq.options[i].text.size(),
                                         "combination of response labels"));
    }
  }

  bool shared_pair = false;
  if (matching < 2) {
    // Multi-part options that share two or more components are the other
    // K-type shape.
    std::vector<std::set<std::string>> sets;
    for (const auto& opt : mcq.options) {
      auto parts = option_components(opt.text);
      sets.emplace_back(parts.begin(), parts.end());
    }
    for (size_t i = 0; i < sets.size() && !shared_pair; ++i) {
      for (size_t j = i + 1; j < sets.size() && !shared_pair; ++j) {
        if (sets[i].size() < 2 || sets[j].size() < 2) continue;
        int shared = 0;
        for (const auto& c : sets[i]) shared += sets[j].count(c) ? 1 : 0;
        if (shared >= 2) {
          shared_pair = true;
          evidence.push_back(option_evidence(static_cast<int>(i), 0,
                                             mcq.options[i].text.size(),
                                             "shares multiple components"));
          evidence.push_back(option_evidence(static_cast<int>(j), 0,
                                             mcq.options[j].text.size(),
                                             "shares multiple components"));
        }
      }
    }
  }

  if (matching < 2 && !shared_pair) return f;
  std::string summary = matching >= 2
                            ? std::to_string(matching) +
                                  " options reference other response labels"
                            : "options share multiple answer components";
  resolve_candidate(f, Criterion::kComplexKType, mcq, env, summary,
                    std::move(evidence));
  return f;
}

FlawFinding detect_gratuitous_information(const Mcq& mcq,
                                          const DetectorEnv& env) {
  FlawFinding f = base_finding(Criterion::kGratuitousInformation);

  int stem_words = 0;
  for (const auto& t : env.kit.tokenize(mcq.stem)) {
    if (t.pos != Pos::kOther) ++stem_words;
  }
  double median = stem_words;  // single-question runs never pass the gate
  if (env.context != nullptr) median = env.context->median_for(mcq.domain);
  if (median <= 0.0 ||
      stem_words <= env.cfg.gratuitous_length_factor * median) {
    return f;
  }

  // Option vocabulary for the overlap test.
  std::set<std::string> option_lemmas;
  for (const auto& opt : mcq.options) {
    for (const auto& lemma : env.kit.content_lemmas(opt.text)) {
      option_lemmas.insert(lemma);
    }
  }

  // Split the stem into sentences, then look for one with no lemma
  // overlap with any option.
  std::vector<std::pair<size_t, size_t>> sentences;
  size_t sent_begin = 0;
  for (size_t i = 0; i < mcq.stem.size(); ++i) {
    char c = mcq.stem[i];
    if (c != '.' && c != '?' && c != '!') continue;
    sentences.emplace_back(sent_begin, i + 1);
    sent_begin = i + 1;
    while (sent_begin < mcq.stem.size() &&
           std::isspace(static_cast<unsigned char>(mcq.stem[sent_begin]))) {
      ++sent_begin;
    }
    i = sent_begin == 0 ? i : sent_begin - 1;
  }
  if (sent_begin < mcq.stem.size()) {
    sentences.emplace_back(sent_begin, mcq.stem.size());
  }

  std::optional<std::pair<size_t, size_t>> decorative;
  for (const auto& [begin, end] : sentences) {
    std::string_view sentence(mcq.stem.data() + begin, end - begin);
    auto lemmas = env.kit.content_lemmas(sentence);
    if (lemmas.empty()) continue;
    bool overlap = false;
    for (const auto& l : lemmas) overlap = overlap || option_lemmas.count(l);
    if (!overlap) {
      decorative = {begin, end};
      break;
    }
  }
  if (!decorative) return f;

  std::vector<Evidence> evidence;
  evidence.push_back(stem_evidence(decorative->first, decorative->second,
                                   "no lemma overlap with any option"));
  const std::string sentence_text =
      mcq.stem.substr(decorative->first, decorative->second - decorative->first);
  resolve_candidate(f, Criterion::kGratuitousInformation, mcq, env,
                    sentence_text, std::move(evidence));
  return f;
}

FlawFinding detect_unfocused_stem(const Mcq& mcq, const DetectorEnv& env) {
  FlawFinding f = base_finding(Criterion::kUnfocusedStem);
  const auto wf = env.kit.wellformedness_breakdown(mcq.stem);
  const auto tokens = env.kit.tokenize(mcq.stem);

  // Completion frames: a blank, an unfinished verb-bearing sentence, or a
  // trailing article/preposition all invite completion from the options.
  bool blank = false;
  for (const auto& t : tokens) {
    if (!t.surface.empty() &&
        t.surface.find_first_not_of('_') == std::string::npos &&
        t.surface.size() >= static_cast<size_t>(env.cfg.min_blank_run)) {
      blank = true;
    }
  }
  bool terminal = false;
  if (!tokens.empty()) {
    const auto& last = tokens.back();
    terminal = last.pos == Pos::kOther &&
               (last.surface.find('.') != std::string::npos ||
                last.surface.find('?') != std::string::npos ||
                last.surface.find('!') != std::string::npos);
  }
  const Token* last_word = nullptr;
  for (const auto& t : tokens) {
    if (t.pos != Pos::kOther) last_word = &t;
  }
  bool trailing_hook = false;
  if (last_word != nullptr) {
    const std::string lower = ascii_lower(last_word->surface);
    trailing_hook = last_word->pos == Pos::kDet || lower == "of" ||
                    lower == "to" || lower == "is" || lower == "are";
  }
  const bool completion =
      blank || (wf.has_finite_verb && !terminal) || trailing_hook;
  const bool any_frame = wf.has_frame || completion;

  // Generic "which is correct?" stems carry no standalone question.
  static const char* kGeneric[] = {
      "which is correct",   "which is true",    "which are correct",
      "which are true",     "which is false",   "which is incorrect",
      "which is right",     "which is wrong",   "which statement is correct",
      "which statement is true",
  };
  const std::string lower = ascii_lower(mcq.stem);
  bool generic = false;
  for (const char* p : kGeneric) {
    if (lower.find(p) != std::string::npos) generic = true;
  }

  std::string reason;
  if (wf.score < env.cfg.wellformedness_threshold) {
    reason = "well-formedness " + format2(wf.score);
  } else if (!any_frame) {
    reason = "no question, instruction, or completion frame";
  } else if (generic) {
    reason = "generic which-is-correct stem";
  } else {
    return f;
  }

  std::vector<Evidence> evidence;
  evidence.push_back(stem_evidence(0, mcq.stem.size(), reason));
  resolve_candidate(f, Criterion::kUnfocusedStem, mcq, env, reason,
                    std::move(evidence));
  return f;
}

FlawFinding detect_convergence_cues(const Mcq& mcq, const DetectorEnv& env) {
  FlawFinding f = base_finding(Criterion::kConvergenceCues);

  std::vector<std::set<std::string>> sets;
  int multi = 0;
  for (const auto& opt : mcq.options) {
    auto parts = option_components(opt.text);
    std::set<std::string> set(parts.begin(), parts.end());
    multi += set.size() >= 2 ? 1 : 0;
    sets.push_back(std::move(set));
  }
  if (multi * 2 < static_cast<int>(mcq.options.size())) return f;

  std::map<std::string, int> freq;
  for (const auto& set : sets) {
    for (const auto& c : set) ++freq[c];
  }
  std::vector<int> scores;
  for (const auto& set : sets) {
    int s = 0;
    for (const auto& c : set) s += freq[c];
    scores.push_back(s);
  }
  const int correct_score = scores[mcq.key];
  const int max_score = *std::max_element(scores.begin(), scores.end());
  const int min_score = *std::min_element(scores.begin(), scores.end());
  // The cue exists when the key sits at the top of the component-frequency
  // ranking and the ranking is not flat. Ties at the top still cue: the
  // test-wise pick among top-scoring options beats chance.
  if (correct_score != max_score || max_score == min_score) return f;

  std::vector<Evidence> evidence;
  std::string summary;
  for (size_t i = 0; i < mcq.options.size(); ++i) {
    if (!summary.empty()) summary += ", ";
    summary += std::string(1, static_cast<char>('A' + i)) + "=" +
               std::to_string(scores[i]);
    if (static_cast<int>(i) == mcq.key) summary += " (key)";
  }
  evidence.push_back(option_evidence(mcq.key, 0, mcq.correct_text().size(),
                                     "component score " + summary));
  resolve_candidate(f, Criterion::kConvergenceCues, mcq, env,
                    "component frequency scores: " + summary,
                    std::move(evidence));
  return f;
}

}  // namespace mcqlint::detectors
