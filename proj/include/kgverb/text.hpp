// Copyright 2026 The kgverb Authors.
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

#ifndef KGVERB_TEXT_HPP_
#define KGVERB_TEXT_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace kgverb {

// Byte-level ASCII helpers. Bytes >= 0x80 (UTF-8 continuation/lead bytes)
// count as word constituents so multi-byte characters never produce a
// boundary in the middle of a code point.

inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }

inline bool is_ascii_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

inline bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }

inline bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

inline char ascii_lower(char c) {
  return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline bool is_word_byte(char c) {
  return is_ascii_alpha(c) || is_ascii_digit(c) ||
         static_cast<unsigned char>(c) >= 0x80;
}

// Word boundary: start/end of text or a non-word byte on the outside.
inline bool boundary_before(std::string_view text, std::size_t pos) {
  return pos == 0 || !is_word_byte(text[pos - 1]);
}

inline bool boundary_after(std::string_view text, std::size_t end) {
  return end >= text.size() || !is_word_byte(text[end]);
}

inline std::string lower_copy(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = ascii_lower(c);
  return out;
}

inline std::string_view trim(std::string_view s) {
  std::size_t b = 0;
  while (b < s.size() && is_ascii_space(s[b])) ++b;
  std::size_t e = s.size();
  while (e > b && is_ascii_space(s[e - 1])) --e;
  return s.substr(b, e - b);
}

// Collapses every whitespace run to a single space and trims the ends.
inline std::string normalize_whitespace(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  bool pending_space = false;
  for (char c : s) {
    if (is_ascii_space(c)) {
      if (!out.empty()) pending_space = true;
    } else {
      if (pending_space) out += ' ';
      pending_space = false;
      out += c;
    }
  }
  return out;
}

// Case-insensitive word-bounded containment of `needle` in `haystack`.
inline bool contains_word_bounded(std::string_view haystack,
                                  std::string_view needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  const std::size_t n = haystack.size();
  const std::size_t m = needle.size();
  for (std::size_t i = 0; i + m <= n; ++i) {
    if (!boundary_before(haystack, i)) continue;
    std::size_t j = 0;
    while (j < m && ascii_lower(haystack[i + j]) == ascii_lower(needle[j])) ++j;
    if (j == m && boundary_after(haystack, i + m)) return true;
  }
  return false;
}

}  // namespace kgverb

#endif  // KGVERB_TEXT_HPP_
