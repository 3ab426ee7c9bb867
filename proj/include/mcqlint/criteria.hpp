// criteria.hpp
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
// The fixed registry of item-writing-flaw criteria. The enum order is the
// canonical order used by the gold CSV columns, report layouts, and every
// per-criterion array in the code base.

#ifndef MCQLINT_CRITERIA_HPP
#define MCQLINT_CRITERIA_HPP

#include <array>
#include <optional>
#include <string_view>

namespace mcqlint {

enum class Criterion : int {
  kLongestOptionCorrect = 0,
  kAmbiguousInformation,
  kImplausibleDistractors,
  kTrueOrFalse,
  kAbsoluteTerms,
  kComplexKType,
  kNegativelyWorded,
  kConvergenceCues,
  kLostSequence,
  kUnfocusedStem,
  kNoneOfTheAbove,
  kWordRepeats,
  kMoreThanOneCorrect,
  kLogicalCues,
  kAllOfTheAbove,
  kFillInTheBlank,
  kVagueTerms,
  kGrammaticalCues,
  kGratuitousInformation,
};

inline constexpr int kCriterionCount = 19;

// Which detection technique owns a criterion.
enum class Tier {
  kTextMatch,
  kNlp,
  kLlmVerified,
};

std::string_view criterion_name(Criterion c);
std::optional<Criterion> criterion_from_name(std::string_view name);
Tier criterion_tier(Criterion c);
std::string_view tier_name(Tier t);

constexpr std::array<Criterion, kCriterionCount> all_criteria() {
  std::array<Criterion, kCriterionCount> out{};
  for (int i = 0; i < kCriterionCount; ++i) out[i] = static_cast<Criterion>(i);
  return out;
}

constexpr int index_of(Criterion c) { return static_cast<int>(c); }

}  // namespace mcqlint

#endif  // MCQLINT_CRITERIA_HPP
