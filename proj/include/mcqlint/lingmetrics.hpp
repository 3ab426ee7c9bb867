// lingmetrics.hpp
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
// The five per-question linguistic quality metrics (perplexity, Distinct-3
// diversity, grammar-error count, cognitive-complexity level,
// answerability) and the grouped comparison summaries.

#ifndef MCQLINT_LINGMETRICS_HPP
#define MCQLINT_LINGMETRICS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mcqlint/corpus.hpp"
#include "mcqlint/llmgate.hpp"
#include "mcqlint/textkit.hpp"

namespace mcqlint::lingmetrics {

// Whether metrics read the stem only or the whole question text.
enum class MetricScope { kStemAndOptions, kStemOnly };

struct LinguisticMetrics {
  double perplexity = 0.0;
  double diversity = 1.0;            // unique 3-grams / total 3-grams
  int grammar_errors = 0;
  int bloom_level = 0;               // 0 remember .. 5 create
  std::optional<int> answerability;  // 0/1; empty when the gate is off
};

class PerplexityScorer {
 public:
  virtual ~PerplexityScorer() = default;
  virtual double perplexity(const Mcq& mcq, const TextKit& kit,
                            MetricScope scope) const = 0;
  virtual std::string name() const = 0;
};

struct TrigramOptions {
  double add_k = 0.1;          // add-k mass inside each order's estimate
  double weight_trigram = 0.5; // interpolation weights, must sum to 1
  double weight_bigram = 0.3;
  double weight_unigram = 0.2;
};

// Word-trigram model with interpolated add-k smoothing, trained from a
// plain-text corpus of one sentence per line. Deterministic; the bundled
// reference corpus ships under data/corpus/.
class TrigramScorer : public PerplexityScorer {
 public:
  static std::unique_ptr<TrigramScorer> from_file(const std::string& path,
                                                  const TextKit& kit,
                                                  TrigramOptions options = {});
  static std::unique_ptr<TrigramScorer> from_sentences(
      const std::vector<std::string>& sentences, const TextKit& kit,
      TrigramOptions options = {});

  double perplexity(const Mcq& mcq, const TextKit& kit,
                    MetricScope scope) const override;
  // Per-token stream form used by the tests.
  double perplexity_of_tokens(const std::vector<std::string>& tokens) const;
  std::string name() const override { return "trigram"; }

  size_t vocabulary_size() const { return vocab_.size(); }

 private:
  TrigramScorer(TrigramOptions options) : options_(options) {}
  void train(const std::vector<std::vector<std::string>>& sentences);
  double token_logprob(const std::string& w, const std::string& u,
                       const std::string& v) const;

  TrigramOptions options_;
  std::map<std::string, long> vocab_;
  std::map<std::string, long> unigrams_;
  std::map<std::string, long> bigrams_;
  std::map<std::string, long> trigrams_;
  std::map<std::string, long> bigram_context_;
  std::map<std::string, long> trigram_context_;
  long total_tokens_ = 0;
};

// Unique word 3-grams over total word 3-grams of the lowercased,
// punctuation-free token stream; < 3 tokens yields 1.0 by convention.
double distinct3(const Mcq& mcq, const TextKit& kit,
                 MetricScope scope = MetricScope::kStemAndOptions);

struct GrammarHit {
  std::string rule;       // stable rule id
  bool in_stem = true;
  int option_index = -1;
  size_t begin = 0;
  size_t end = 0;
  std::string note;
};

// Fixed rule catalog: sv_agreement, article_agreement, doubled_word,
// initial_lowercase (applies to the stem only), spelling.
std::vector<GrammarHit> grammar_hits(const Mcq& mcq, const TextKit& kit,
                                     MetricScope scope = MetricScope::kStemAndOptions);
int grammar_errors(const Mcq& mcq, const TextKit& kit,
                   MetricScope scope = MetricScope::kStemAndOptions);

// Maximum bloom-verb level over the stem's verbs; 0 when none match.
int bloom_level(const Mcq& mcq, const TextKit& kit);

// 1 when the gate's majority answer equals the key, else 0.
int answerability(const Mcq& mcq, llmgate::Gate& gate);

struct GroupSummary {
  std::string domain;
  std::string iwf_band;  // "0-1" or "2+"
  int n = 0;
  double perplexity = 0.0;
  double diversity = 0.0;
  double grammar_errors = 0.0;
  double bloom_level = 0.0;
  std::optional<double> answerability;
};

// Per (domain, band) means; band splits at flaw_count <= 1. flaw_counts
// maps question id -> flaw count (from gold labels or detector reports).
std::vector<GroupSummary> group_summaries(
    const Dataset& dataset,
    const std::map<std::string, int>& flaw_counts,
    const std::map<std::string, LinguisticMetrics>& metrics);

}  // namespace mcqlint::lingmetrics

#endif  // MCQLINT_LINGMETRICS_HPP
