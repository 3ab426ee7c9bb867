// detectors_internal.hpp
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
// Helpers shared between the detector translation units. Not part of the
// public surface.

#ifndef MCQLINT_DETECTORS_INTERNAL_HPP
#define MCQLINT_DETECTORS_INTERNAL_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcqlint/detectors.hpp"

namespace mcqlint::detectors::internal {

// Lowercases, strips punctuation, collapses whitespace.
std::string normalize_phrase(std::string_view text);

// Byte spans of whole-word occurrences (case-insensitive).
std::vector<std::pair<size_t, size_t>> whole_word_spans(std::string_view text,
                                                        std::string_view word);

// Spans of "..."-quoted regions (straight and curly).
std::vector<std::pair<size_t, size_t>> quoted_regions(std::string_view text);

bool inside_any(const std::vector<std::pair<size_t, size_t>>& regions,
                size_t begin, size_t end);

Evidence stem_evidence(size_t begin, size_t end, std::string note);
Evidence option_evidence(int index, size_t begin, size_t end, std::string note);

FlawFinding base_finding(Criterion c);

std::string format2(double v);

// Whether a word takes "an" (phonetic, with the usual exception lists).
bool vowel_sound(const std::string& word);

// First alphabetic word, lowercased.
std::string leading_word(const std::string& text);

}  // namespace mcqlint::detectors::internal

#endif  // MCQLINT_DETECTORS_INTERNAL_HPP
