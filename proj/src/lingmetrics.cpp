// lingmetrics.cpp
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

#include "mcqlint/lingmetrics.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "mcqlint/detectors_internal.hpp"
#include "mcqlint/unicode.hpp"

namespace mcqlint::lingmetrics {

namespace {

bool word_token(const Token& t) {
  return t.pos != Pos::kOther &&
         !(t.surface.find_first_not_of('_') == std::string::npos);
}

// Lowercased word stream of the question per the metric scope.
std::vector<std::string> question_words(const Mcq& mcq, const TextKit& kit,
                                        MetricScope scope) {
  std::vector<std::string> words;
  auto add = [&](const std::string& text) {
    for (const auto& t : kit.tokenize(text)) {
      if (word_token(t)) words.push_back(ascii_lower(t.surface));
    }
  };
  add(mcq.stem);
  if (scope == MetricScope::kStemAndOptions) {
    for (const auto& opt : mcq.options) add(opt.text);
  }
  return words;
}

}  // namespace

double distinct3(const Mcq& mcq, const TextKit& kit, MetricScope scope) {
  const auto words = question_words(mcq, kit, scope);
  if (words.size() < 3) return 1.0;  // convention for short text
  std::set<std::string> unique;
  const size_t total = words.size() - 2;
  for (size_t i = 0; i + 2 < words.size(); ++i) {
    unique.insert(words[i] + "\x1f" + words[i + 1] + "\x1f" + words[i + 2]);
  }
  return static_cast<double>(unique.size()) / static_cast<double>(total);
}

// --- trigram scorer ---

namespace {
const std::string kBos = "<s>";
const std::string kEos = "</s>";
const std::string kUnk = "<unk>";

std::string join2(const std::string& a, const std::string& b) {
  return a + "\x1f" + b;
}
std::string join3(const std::string& a, const std::string& b,
                  const std::string& c) {
  return a + "\x1f" + b + "\x1f" + c;
}
}  // namespace

std::unique_ptr<TrigramScorer> TrigramScorer::from_sentences(
    const std::vector<std::string>& sentences, const TextKit& kit,
    TrigramOptions options) {
  std::vector<std::vector<std::string>> tokenized;
  for (const auto& s : sentences) {
    std::vector<std::string> words;
    for (const auto& t : kit.tokenize(s)) {
      if (word_token(t)) words.push_back(ascii_lower(t.surface));
    }
    if (!words.empty()) tokenized.push_back(std::move(words));
  }
  auto scorer = std::unique_ptr<TrigramScorer>(new TrigramScorer(options));
  scorer->train(tokenized);
  return scorer;
}

std::unique_ptr<TrigramScorer> TrigramScorer::from_file(
    const std::string& path, const TextKit& kit, TrigramOptions options) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open scorer corpus " + path);
  std::vector<std::string> sentences;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) sentences.push_back(line);
  }
  return from_sentences(sentences, kit, options);
}

void TrigramScorer::train(
    const std::vector<std::vector<std::string>>& sentences) {
  vocab_[kUnk] = 0;
  for (const auto& sent : sentences) {
    for (const auto& w : sent) ++vocab_[w];
  }
  for (const auto& sent : sentences) {
    std::vector<std::string> padded;
    padded.push_back(kBos);
    padded.push_back(kBos);
    padded.insert(padded.end(), sent.begin(), sent.end());
    padded.push_back(kEos);
    for (size_t i = 2; i < padded.size(); ++i) {
      const std::string& w = padded[i];
      const std::string& v = padded[i - 1];
      const std::string& u = padded[i - 2];
      ++unigrams_[w];
      ++total_tokens_;
      ++bigrams_[join2(v, w)];
      ++bigram_context_[v];
      ++trigrams_[join3(u, v, w)];
      ++trigram_context_[join2(u, v)];
    }
  }
}

double TrigramScorer::token_logprob(const std::string& w, const std::string& u,
                                    const std::string& v) const {
  const double k = options_.add_k;
  const double vocab = static_cast<double>(vocab_.size()) + 1.0;  // + EOS

  auto count = [](const std::map<std::string, long>& m,
                  const std::string& key) -> double {
    auto it = m.find(key);
    return it == m.end() ? 0.0 : static_cast<double>(it->second);
  };

  const double p1 =
      (count(unigrams_, w) + k) / (static_cast<double>(total_tokens_) + k * vocab);
  const double p2 =
      (count(bigrams_, join2(v, w)) + k) / (count(bigram_context_, v) + k * vocab);
  const double p3 = (count(trigrams_, join3(u, v, w)) + k) /
                    (count(trigram_context_, join2(u, v)) + k * vocab);

  const double p = options_.weight_trigram * p3 + options_.weight_bigram * p2 +
                   options_.weight_unigram * p1;
  return std::log(p);
}

double TrigramScorer::perplexity_of_tokens(
    const std::vector<std::string>& tokens) const {
  if (tokens.empty()) return 1.0;
  std::string u = kBos, v = kBos;
  double nll = 0.0;
  long n = 0;
  for (const auto& raw : tokens) {
    const std::string w = vocab_.count(raw) ? raw : kUnk;
    nll -= token_logprob(w, u, v);
    ++n;
    u = v;
    v = w;
  }
  return std::exp(nll / static_cast<double>(n));
}

double TrigramScorer::perplexity(const Mcq& mcq, const TextKit& kit,
                                 MetricScope scope) const {
  // Stem and each option score as separate sentences with an end marker.
  std::vector<std::string> texts{mcq.stem};
  if (scope == MetricScope::kStemAndOptions) {
    for (const auto& opt : mcq.options) texts.push_back(opt.text);
  }
  double nll = 0.0;
  long n = 0;
  for (const auto& text : texts) {
    std::string u = kBos, v = kBos;
    for (const auto& t : kit.tokenize(text)) {
      if (!word_token(t)) continue;
      const std::string raw = ascii_lower(t.surface);
      const std::string w = vocab_.count(raw) ? raw : kUnk;
      nll -= token_logprob(w, u, v);
      ++n;
      u = v;
      v = w;
    }
    nll -= token_logprob(kEos, u, v);
    ++n;
  }
  if (n == 0) return 1.0;
  return std::exp(nll / static_cast<double>(n));
}

// --- grammar rule catalog ---

namespace {

using detectors::internal::vowel_sound;

bool plural_noun(const Token& t) {
  if (t.pos != Pos::kNoun) return false;
  const std::string lower = ascii_lower(t.surface);
  return lower != t.lemma && !lower.empty() && lower.back() == 's';
}

bool singular_noun(const Token& t) {
  if (t.pos != Pos::kNoun) return false;
  return ascii_lower(t.surface) == t.lemma;
}

bool is_word_form(const std::string& lower, const TextKit& kit) {
  const auto& lex = kit.lexicons();
  if (lex.wordlist.count(lower)) return true;
  if (lex.dictionary.count(lower)) return true;
  return false;
}

void scan_unit(const std::string& text, bool is_stem, int option_index,
               const TextKit& kit, std::vector<GrammarHit>& hits) {
  const auto tokens = kit.tokenize(text);
  std::vector<const Token*> words;
  for (const auto& t : tokens) {
    if (word_token(t)) words.push_back(&t);
  }

  auto push = [&](const char* rule, const Token& t, std::string note) {
    GrammarHit hit;
    hit.rule = rule;
    hit.in_stem = is_stem;
    hit.option_index = option_index;
    hit.begin = t.begin;
    hit.end = t.end;
    hit.note = std::move(note);
    hits.push_back(std::move(hit));
  };

  static const std::set<std::string> wh = {"what", "which", "who"};
  static const std::set<std::string> singular_cop = {"is", "was", "has",
                                                     "does"};
  static const std::set<std::string> plural_cop = {"are", "were"};

  for (size_t i = 0; i < words.size(); ++i) {
    const std::string lower = ascii_lower(words[i]->surface);

    // Subject-verb agreement: wh + is/was + plural head noun.
    if (wh.count(lower) && i + 1 < words.size()) {
      const std::string cop = ascii_lower(words[i + 1]->surface);
      if (cop == "is" || cop == "was") {
        for (size_t j = i + 2; j < words.size(); ++j) {
          const Token& cand = *words[j];
          if (cand.pos == Pos::kDet || cand.pos == Pos::kAdj ||
              cand.pos == Pos::kAdv) {
            continue;
          }
          if (cand.pos == Pos::kNoun && plural_noun(cand)) {
            push("sv_agreement", cand,
                 "singular '" + cop + "' with plural '" +
                     ascii_lower(cand.surface) + "'");
          }
          break;
        }
      }
    }
    // Plural noun directly followed by a singular copula, and vice versa.
    if (i + 1 < words.size()) {
      const std::string next = ascii_lower(words[i + 1]->surface);
      if (plural_noun(*words[i]) && singular_cop.count(next)) {
        push("sv_agreement", *words[i + 1],
             "plural '" + lower + "' with singular '" + next + "'");
      } else if (singular_noun(*words[i]) && plural_cop.count(next)) {
        push("sv_agreement", *words[i + 1],
             "singular '" + lower + "' with plural '" + next + "'");
      }
    }

    // Article agreement.
    if ((lower == "a" || lower == "an") && i + 1 < words.size()) {
      const std::string next = ascii_lower(words[i + 1]->surface);
      const bool vowel = vowel_sound(next);
      if ((lower == "a" && vowel) || (lower == "an" && !vowel)) {
        push("article_agreement", *words[i],
             "'" + lower + "' before '" + next + "'");
      }
    }

    // Doubled word.
    if (i + 1 < words.size() &&
        lower == ascii_lower(words[i + 1]->surface)) {
      push("doubled_word", *words[i + 1], "'" + lower + "' repeated");
    }

    // Spelling against the bundled word list.
    bool check_spelling = words[i]->pos != Pos::kNum && lower.size() >= 4;
    for (char c : words[i]->surface) {
      if (!is_ascii_alpha(c)) check_spelling = false;
    }
    if (check_spelling) {
      bool all_caps = true;
      for (char c : words[i]->surface) {
        all_caps = all_caps && c >= 'A' && c <= 'Z';
      }
      const bool capitalized =
          words[i]->surface[0] >= 'A' && words[i]->surface[0] <= 'Z';
      const bool proper_noun = capitalized && i > 0;
      if (!all_caps && !proper_noun && !is_word_form(lower, kit) &&
          !is_word_form(words[i]->lemma, kit)) {
        push("spelling", *words[i], "unknown word '" + lower + "'");
      }
    }
  }

  // Sentence-initial lowercase, stems only; options are fragments.
  if (is_stem && !words.empty()) {
    char c = words.front()->surface[0];
    if (c >= 'a' && c <= 'z') {
      push("initial_lowercase", *words.front(), "sentence starts lowercase");
    }
  }
}

}  // namespace

std::vector<GrammarHit> grammar_hits(const Mcq& mcq, const TextKit& kit,
                                     MetricScope scope) {
  std::vector<GrammarHit> hits;
  scan_unit(mcq.stem, true, -1, kit, hits);
  if (scope == MetricScope::kStemAndOptions) {
    for (size_t i = 0; i < mcq.options.size(); ++i) {
      scan_unit(mcq.options[i].text, false, static_cast<int>(i), kit, hits);
    }
  }
  return hits;
}

int grammar_errors(const Mcq& mcq, const TextKit& kit, MetricScope scope) {
  return static_cast<int>(grammar_hits(mcq, kit, scope).size());
}

int bloom_level(const Mcq& mcq, const TextKit& kit) {
  const auto& bloom = kit.lexicons().bloom_verbs;
  int level = 0;
  bool first = true;
  for (const auto& t : kit.tokenize(mcq.stem)) {
    if (!word_token(t)) continue;
    const std::string lower = ascii_lower(t.surface);
    const bool verbish =
        t.pos == Pos::kVerb ||
        (first && kit.lexicons().verb_bases.count(lower) > 0);
    first = false;
    if (!verbish) continue;
    auto it = bloom.find(t.lemma);
    if (it == bloom.end()) it = bloom.find(lower);
    if (it != bloom.end()) level = std::max(level, it->second);
  }
  return level;
}

int answerability(const Mcq& mcq, llmgate::Gate& gate) {
  auto answer = gate.ask_answer(mcq);
  return (answer && *answer == mcq.key) ? 1 : 0;
}

std::vector<GroupSummary> group_summaries(
    const Dataset& dataset, const std::map<std::string, int>& flaw_counts,
    const std::map<std::string, LinguisticMetrics>& metrics) {
  struct Accum {
    int n = 0;
    double perplexity = 0, diversity = 0, grammar = 0, bloom = 0;
    double answer_sum = 0;
    int answer_n = 0;
  };
  std::map<std::pair<std::string, std::string>, Accum> groups;

  for (const auto& q : dataset.questions) {
    auto fc = flaw_counts.find(q.id);
    auto m = metrics.find(q.id);
    if (fc == flaw_counts.end() || m == metrics.end()) continue;
    const std::string band = fc->second <= 1 ? "0-1" : "2+";
    Accum& acc = groups[{q.domain, band}];
    ++acc.n;
    acc.perplexity += m->second.perplexity;
    acc.diversity += m->second.diversity;
    acc.grammar += m->second.grammar_errors;
    acc.bloom += m->second.bloom_level;
    if (m->second.answerability) {
      acc.answer_sum += *m->second.answerability;
      ++acc.answer_n;
    }
  }

  std::vector<GroupSummary> out;
  for (const auto& [key, acc] : groups) {
    GroupSummary g;
    g.domain = key.first;
    g.iwf_band = key.second;
    g.n = acc.n;
    g.perplexity = acc.perplexity / acc.n;
    g.diversity = acc.diversity / acc.n;
    g.grammar_errors = acc.grammar / acc.n;
    g.bloom_level = acc.bloom / acc.n;
    if (acc.answer_n > 0) g.answerability = acc.answer_sum / acc.answer_n;
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace mcqlint::lingmetrics
