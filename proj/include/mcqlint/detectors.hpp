// detectors.hpp
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
// The 19 flaw detectors. Text-match and NLP detectors are pure functions
// of (question, config, textkit); verification-tier detectors additionally
// consult the gate when a lexical/pattern candidate exists and llm_enabled
// is set. Without a gate the candidate itself decides the flag, so the
// tool degrades to a pure rule engine offline.

#ifndef MCQLINT_DETECTORS_HPP
#define MCQLINT_DETECTORS_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcqlint/corpus.hpp"
#include "mcqlint/criteria.hpp"
#include "mcqlint/llmgate.hpp"
#include "mcqlint/textkit.hpp"

namespace mcqlint::detectors {

struct DetectorConfig {
  // Longest-option rule: flag when every distractor is shorter than
  // ratio * length(correct). 1.0 degenerates to "longer by even a single
  // character".
  double longest_option_ratio = 0.8;
  // A distractor is implausible when its similarity to the key falls
  // below this AND its shape mismatches the stem's expected answer type.
  double implausible_sim_threshold = 0.40;
  // Two lemmas count as associated at or above this cosine.
  double synonym_threshold = 0.55;
  double wellformedness_threshold = 0.45;
  int min_blank_run = 3;
  // Margin by which the key's stem association must beat every distractor.
  double logical_cue_margin = 0.15;
  // Near-duplicate option thresholds (more-than-one-correct).
  double near_duplicate_edit = 0.90;
  double near_duplicate_embedding = 0.95;
  // Semantically-close option pairs at or above this (but below the
  // near-duplicate bar) are worth an LLM consult.
  double multi_correct_similarity = 0.90;
  // Gratuitous-information length gate: stem tokens > factor * domain median.
  double gratuitous_length_factor = 2.0;
  bool llm_enabled = false;
  std::array<bool, kCriterionCount> enabled = [] {
    std::array<bool, kCriterionCount> a{};
    a.fill(true);
    return a;
  }();

  std::string to_json() const;
  static DetectorConfig from_json(const std::string& json_text);
  // Digest of the canonical serialization; embedded in every report.
  std::string digest() const;
};

enum class EvidenceLocation { kStem, kOption };

struct Evidence {
  EvidenceLocation where = EvidenceLocation::kStem;
  int option_index = -1;  // valid when where == kOption
  size_t begin = 0;       // byte span into the named text
  size_t end = 0;
  std::string note;
};

enum class FindingStatus { kOk, kUnavailable };

struct FlawFinding {
  Criterion criterion = Criterion::kLongestOptionCorrect;
  bool flagged = false;
  Tier tier = Tier::kTextMatch;
  bool llm_consulted = false;
  FindingStatus status = FindingStatus::kOk;
  std::vector<Evidence> evidence;
  std::string note;
};

struct FlawReport {
  std::string question_id;
  std::array<FlawFinding, kCriterionCount> findings;

  int flaw_count() const;
  bool acceptable() const { return flaw_count() <= 1; }
  bool any_unavailable() const;
  const FlawFinding& finding(Criterion c) const {
    return findings[index_of(c)];
  }
};

// Dataset-level statistics some detectors need (median stem length per
// domain for the gratuitous-information gate).
struct DatasetContext {
  std::map<std::string, double> median_stem_tokens;
  double fallback_median = 0.0;

  double median_for(const std::string& domain) const;
};

// Everything a detector may consult. gate may be null when llm_enabled is
// false; context may be null for single-question runs.
struct DetectorEnv {
  const DetectorConfig& cfg;
  const TextKit& kit;
  llmgate::Gate* gate = nullptr;
  const DatasetContext* context = nullptr;
};

// --- text-matching tier ---
FlawFinding detect_none_of_the_above(const Mcq& mcq, const DetectorEnv& env);
FlawFinding detect_all_of_the_above(const Mcq& mcq, const DetectorEnv& env);
FlawFinding detect_fill_in_the_blank(const Mcq& mcq, const DetectorEnv& env);
FlawFinding detect_true_or_false(const Mcq& mcq, const DetectorEnv& env);
// Pass the true/false result when already computed; T/F questions are
// exempt from the longest-option rule.
FlawFinding detect_longest_option_correct(
    const Mcq& mcq, const DetectorEnv& env,
    std::optional<bool> true_or_false_flagged = std::nullopt);
FlawFinding detect_negatively_worded(const Mcq& mcq, const DetectorEnv& env);
FlawFinding detect_lost_sequence(const Mcq& mcq, const DetectorEnv& env);
FlawFinding detect_vague_terms(const Mcq& mcq, const DetectorEnv& env);

// --- NLP tier ---
FlawFinding detect_implausible_distractors(const Mcq& mcq,
                                           const DetectorEnv& env);
FlawFinding detect_word_repeats(const Mcq& mcq, const DetectorEnv& env);
FlawFinding detect_logical_cues(const Mcq& mcq, const DetectorEnv& env);
FlawFinding detect_ambiguous_information(const Mcq& mcq,
                                         const DetectorEnv& env);
FlawFinding detect_grammatical_cues(const Mcq& mcq, const DetectorEnv& env);

// --- verification tier ---
FlawFinding detect_absolute_terms(const Mcq& mcq, const DetectorEnv& env);
FlawFinding detect_more_than_one_correct(const Mcq& mcq,
                                         const DetectorEnv& env);
FlawFinding detect_complex_k_type(const Mcq& mcq, const DetectorEnv& env);
FlawFinding detect_gratuitous_information(const Mcq& mcq,
                                          const DetectorEnv& env);
FlawFinding detect_unfocused_stem(const Mcq& mcq, const DetectorEnv& env);
FlawFinding detect_convergence_cues(const Mcq& mcq, const DetectorEnv& env);

// Runs every detector and assembles the findings in canonical order.
// Gate failures surface as per-finding UNAVAILABLE status without
// aborting the remaining criteria.
FlawReport run_all(const Mcq& mcq, const DetectorEnv& env);

// Helpers shared by detectors and tests.

// Scalar parse for the lost-sequence rule: numbers, percentages,
// currency, ranges (lower bound), and dates.
std::optional<double> parse_option_scalar(const std::string& text);

enum class OptionShape {
  kNounPhrase,
  kVerbPhrase,
  kClause,
  kAdjPhrase,
  kNumeric,
  kOther,
};
OptionShape option_shape(const std::vector<Token>& tokens,
                         const TextKit& kit);
// Shapes a stem's wh/imperative frame expects; empty = no expectation.
std::vector<OptionShape> expected_shapes(const std::vector<Token>& stem_tokens,
                                         const TextKit& kit);

// Normalized Levenshtein similarity in [0,1] over lowercased text.
double edit_similarity(std::string_view a, std::string_view b);

DatasetContext make_context(const Dataset& dataset, const TextKit& kit);

}  // namespace mcqlint::detectors

#endif  // MCQLINT_DETECTORS_HPP
