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
//
// Rule-based sentence segmentation for page root sections. A terminator
// ('.', '!', '?') ends a sentence when it sits outside parentheses and is
// followed by whitespace plus an uppercase letter, or by nothing but
// trailing whitespace. A fixed abbreviation stoplist keeps "Dr. Smith"
// and friends intact. Callers that already have a segmentation can skip
// this entirely (pages may carry pre-split sentences).

#ifndef KGVERB_SENTENCES_HPP_
#define KGVERB_SENTENCES_HPP_

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "kgverb/text.hpp"

namespace kgverb {

namespace detail {

// Lowercase, each entry includes its trailing period. Matched against the
// maximal token (letters, digits, periods) ending at a candidate '.'.
inline constexpr std::array<std::string_view, 42> kAbbreviations = {
    "mr.",   "mrs.",  "ms.",   "dr.",   "prof.", "st.",   "sr.",
    "jr.",   "rev.",  "hon.",  "gen.",  "col.",  "capt.", "lt.",
    "sgt.",  "mt.",   "ft.",   "etc.",  "vs.",   "cf.",   "e.g.",
    "i.e.",  "inc.",  "ltd.",  "co.",   "corp.", "u.s.",  "u.k.",
    "u.n.",  "no.",   "vol.",  "fig.",  "jan.",  "feb.",  "mar.",
    "apr.",  "aug.",  "sep.",  "sept.", "oct.",  "nov.",  "dec.",
};

// True if the token ending at text[dot] (a '.') is a known abbreviation.
inline bool ends_with_abbreviation(std::string_view text, std::size_t dot) {
  std::size_t start = dot;
  while (start > 0) {
    char c = text[start - 1];
    if (is_ascii_alpha(c) || is_ascii_digit(c) || c == '.')
      --start;
    else
      break;
  }
  if (start == dot) return false;
  std::string token = lower_copy(text.substr(start, dot - start + 1));
  for (std::string_view abbr : kAbbreviations)
    if (token == abbr) return true;
  return false;
}

}  // namespace detail

// Splits root-section text into sentences. Spans are non-overlapping and
// cover the input, so joining the results reproduces the text modulo
// whitespace. Empty input yields an empty list.
inline std::vector<std::string> split_sentences(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  int paren_depth = 0;

  auto flush = [&](std::size_t end_exclusive) {
    std::string_view piece = text.substr(start, end_exclusive - start);
    std::string trimmed(trim(piece));
    if (!trimmed.empty()) out.push_back(std::move(trimmed));
    start = end_exclusive;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(') {
      ++paren_depth;
      continue;
    }
    if (c == ')') {
      if (paren_depth > 0) --paren_depth;
      continue;
    }
    if (c != '.' && c != '!' && c != '?') continue;
    if (paren_depth > 0) continue;
    if (c == '.' && detail::ends_with_abbreviation(text, i)) continue;

    // Followed by whitespace then an uppercase letter, or only trailing
    // whitespace until end of text.
    std::size_t j = i + 1;
    while (j < text.size() && is_ascii_space(text[j])) ++j;
    bool at_end = (j == text.size());
    bool saw_space = (j > i + 1);
    if (at_end || (saw_space && is_ascii_upper(text[j]))) flush(i + 1);
  }
  flush(text.size());
  return out;
}

}  // namespace kgverb

#endif  // KGVERB_SENTENCES_HPP_
