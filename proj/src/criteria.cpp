// criteria.cpp
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

#include "mcqlint/criteria.hpp"

namespace mcqlint {

namespace {

constexpr std::string_view kNames[kCriterionCount] = {
    "longest_option_correct",
    "ambiguous_information",
    "implausible_distractors",
    "true_or_false",
    "absolute_terms",
    "complex_k_type",
    "negatively_worded",
    "convergence_cues",
    "lost_sequence",
    "unfocused_stem",
    "none_of_the_above",
    "word_repeats",
    "more_than_one_correct",
    "logical_cues",
    "all_of_the_above",
    "fill_in_the_blank",
    "vague_terms",
    "grammatical_cues",
    "gratuitous_information",
};

}  // namespace

std::string_view criterion_name(Criterion c) {
  return kNames[static_cast<int>(c)];
}

std::optional<Criterion> criterion_from_name(std::string_view name) {
  for (int i = 0; i < kCriterionCount; ++i) {
    if (kNames[i] == name) return static_cast<Criterion>(i);
  }
  return std::nullopt;
}

Tier criterion_tier(Criterion c) {
  switch (c) {
    case Criterion::kNoneOfTheAbove:
    case Criterion::kAllOfTheAbove:
    case Criterion::kFillInTheBlank:
    case Criterion::kTrueOrFalse:
    case Criterion::kLongestOptionCorrect:
    case Criterion::kNegativelyWorded:
    case Criterion::kLostSequence:
    case Criterion::kVagueTerms:
      return Tier::kTextMatch;
    case Criterion::kImplausibleDistractors:
    case Criterion::kWordRepeats:
    case Criterion::kLogicalCues:
    case Criterion::kAmbiguousInformation:
    case Criterion::kGrammaticalCues:
      return Tier::kNlp;
    case Criterion::kAbsoluteTerms:
    case Criterion::kMoreThanOneCorrect:
    case Criterion::kComplexKType:
    case Criterion::kGratuitousInformation:
    case Criterion::kUnfocusedStem:
    case Criterion::kConvergenceCues:
      return Tier::kLlmVerified;
  }
  return Tier::kTextMatch;
}

std::string_view tier_name(Tier t) {
  switch (t) {
    case Tier::kTextMatch:
      return "TEXT_MATCH";
    case Tier::kNlp:
      return "NLP";
    case Tier::kLlmVerified:
      return "LLM_VERIFIED";
  }
  return "TEXT_MATCH";
}

}  // namespace mcqlint
