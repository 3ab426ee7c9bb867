// unicode.cpp
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

#include "mcqlint/unicode.hpp"

#include <utility>

namespace mcqlint {

namespace {

// Precomposed Latin letters for base + combining mark pairs. Covers the
// grave/acute/circumflex/tilde/diaeresis/ring/cedilla marks over ASCII
// vowels and the handful of consonants that compose.
struct Composition {
  char base;
  char32_t mark;
  char32_t composed;
};

constexpr Composition kCompositions[] = {
    {'a', 0x300, 0x00E0}, {'a', 0x301, 0x00E1}, {'a', 0x302, 0x00E2},
    {'a', 0x303, 0x00E3}, {'a', 0x308, 0x00E4}, {'a', 0x30A, 0x00E5},
    {'e', 0x300, 0x00E8}, {'e', 0x301, 0x00E9}, {'e', 0x302, 0x00EA},
    {'e', 0x308, 0x00EB}, {'i', 0x300, 0x00EC}, {'i', 0x301, 0x00ED},
    {'i', 0x302, 0x00EE}, {'i', 0x308, 0x00EF}, {'n', 0x303, 0x00F1},
    {'o', 0x300, 0x00F2}, {'o', 0x301, 0x00F3}, {'o', 0x302, 0x00F4},
    {'o', 0x303, 0x00F5}, {'o', 0x308, 0x00F6}, {'u', 0x300, 0x00F9},
    {'u', 0x301, 0x00FA}, {'u', 0x302, 0x00FB}, {'u', 0x308, 0x00FC},
    {'y', 0x301, 0x00FD}, {'y', 0x308, 0x00FF}, {'c', 0x327, 0x00E7},
    {'A', 0x300, 0x00C0}, {'A', 0x301, 0x00C1}, {'A', 0x302, 0x00C2},
    {'A', 0x303, 0x00C3}, {'A', 0x308, 0x00C4}, {'A', 0x30A, 0x00C5},
    {'E', 0x300, 0x00C8}, {'E', 0x301, 0x00C9}, {'E', 0x302, 0x00CA},
    {'E', 0x308, 0x00CB}, {'I', 0x300, 0x00CC}, {'I', 0x301, 0x00CD},
    {'I', 0x302, 0x00CE}, {'I', 0x308, 0x00CF}, {'N', 0x303, 0x00D1},
    {'O', 0x300, 0x00D2}, {'O', 0x301, 0x00D3}, {'O', 0x302, 0x00D4},
    {'O', 0x303, 0x00D5}, {'O', 0x308, 0x00D6}, {'U', 0x300, 0x00D9},
    {'U', 0x301, 0x00DA}, {'U', 0x302, 0x00DB}, {'U', 0x308, 0x00DC},
    {'Y', 0x301, 0x00DD}, {'C', 0x327, 0x00C7},
};

bool is_combining_mark(char32_t cp) { return cp >= 0x300 && cp <= 0x36F; }

}  // namespace

char32_t utf8_decode(std::string_view text, size_t& i) {
  const auto byte = [&](size_t k) -> unsigned char {
    return static_cast<unsigned char>(text[k]);
  };
  unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return 0xFFFD;
  }
  if (i + len > text.size()) {
    ++i;
    return 0xFFFD;
  }
  for (size_t k = 1; k < len; ++k) {
    unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return 0xFFFD;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += len;
  return cp;
}

void utf8_encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

size_t utf8_length(std::string_view text) {
  size_t i = 0, n = 0;
  while (i < text.size()) {
    utf8_decode(text, i);
    ++n;
  }
  return n;
}

std::string nfc_compose(std::string_view text) {
  // Fast path: no combining marks means no work.
  if (text.find('\xCC') == std::string_view::npos &&
      text.find('\xCD') == std::string_view::npos) {
    return std::string(text);
  }
  std::string out;
  out.reserve(text.size());
  size_t i = 0;
  while (i < text.size()) {
    size_t start = i;
    char32_t cp = utf8_decode(text, i);
    if (cp < 0x80 && i < text.size()) {
      size_t j = i;
      char32_t next = utf8_decode(text, j);
      if (is_combining_mark(next)) {
        bool composed = false;
        for (const auto& c : kCompositions) {
          if (c.base == static_cast<char>(cp) && c.mark == next) {
            utf8_encode(c.composed, out);
            i = j;
            composed = true;
            break;
          }
        }
        if (composed) continue;
      }
    }
    out.append(text.substr(start, i - start));
  }
  return out;
}

std::string ascii_lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace mcqlint
