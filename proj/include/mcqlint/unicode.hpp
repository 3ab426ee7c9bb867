// unicode.hpp
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
// Small UTF-8 utilities. nfc_compose covers the combining-diacritic
// sequences over Latin base letters that show up in question text; it is
// not a full Unicode normalizer.

#ifndef MCQLINT_UNICODE_HPP
#define MCQLINT_UNICODE_HPP

#include <cstdint>
#include <string>
#include <string_view>

namespace mcqlint {

// Decodes one code point starting at byte offset i; advances i past it.
// Malformed sequences decode as U+FFFD one byte at a time.
char32_t utf8_decode(std::string_view text, size_t& i);

void utf8_encode(char32_t cp, std::string& out);

// Number of code points in a valid UTF-8 string.
size_t utf8_length(std::string_view text);

// Composes "base letter + combining mark" pairs (U+0300..U+036F over
// ASCII letters) into their precomposed forms. Text without combining
// marks passes through unchanged.
std::string nfc_compose(std::string_view text);

// ASCII-only case fold; non-ASCII bytes pass through.
std::string ascii_lower(std::string_view text);

bool is_ascii_alpha(char c);
bool is_ascii_digit(char c);

}  // namespace mcqlint

#endif  // MCQLINT_UNICODE_HPP
