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
// Date surface forms. Extraction recognizes "Month D, YYYY", "D Month
// YYYY" and "YYYY-MM-DD", plus the partials "Month YYYY" and a bare
// four-digit year in 1000..2999. Matching against a triple date compares
// only the components both sides specify and always insists on year
// agreement, so "15 January 2001" in the graph still matches a sentence
// that mentions nothing more precise than "2001".

#ifndef KGVERB_DATES_HPP_
#define KGVERB_DATES_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "kgverb/core.hpp"
#include "kgverb/text.hpp"

namespace kgverb {

struct ExtractedDate {
  DateValue value;
  std::size_t begin = 0;
  std::size_t end = 0;  // one past the last byte of the matched span

  bool operator==(const ExtractedDate&) const = default;
};

inline constexpr std::array<std::string_view, 12> kMonthNames = {
    "january", "february", "march",     "april",   "may",      "june",
    "july",    "august",   "september", "october", "november", "december",
};

namespace detail {

// Run of min..max digits at pos, not followed by a further digit.
inline std::optional<std::pair<int, std::size_t>> match_digits(
    std::string_view text, std::size_t pos, std::size_t min_len, std::size_t max_len) {
  std::size_t n = 0;
  int value = 0;
  while (pos + n < text.size() && n < max_len && is_ascii_digit(text[pos + n])) {
    value = value * 10 + (text[pos + n] - '0');
    ++n;
  }
  if (n < min_len) return std::nullopt;
  if (pos + n < text.size() && is_ascii_digit(text[pos + n])) return std::nullopt;
  return std::make_pair(value, n);
}

// Full English month name at pos, case-insensitive, ending on a word
// boundary. Returns (month 1..12, name length).
inline std::optional<std::pair<int, std::size_t>> match_month_name(
    std::string_view text, std::size_t pos) {
  for (std::size_t m = 0; m < kMonthNames.size(); ++m) {
    std::string_view name = kMonthNames[m];
    if (pos + name.size() > text.size()) continue;
    bool equal = true;
    for (std::size_t k = 0; k < name.size(); ++k) {
      if (ascii_lower(text[pos + k]) != name[k]) {
        equal = false;
        break;
      }
    }
    if (equal && boundary_after(text, pos + name.size()))
      return std::make_pair(static_cast<int>(m + 1), name.size());
  }
  return std::nullopt;
}

inline std::optional<std::size_t> skip_spaces(std::string_view text, std::size_t pos,
                                              std::size_t min_count) {
  std::size_t n = 0;
  while (pos + n < text.size() && is_ascii_space(text[pos + n])) ++n;
  if (n < min_count) return std::nullopt;
  return pos + n;
}

// "Month D, YYYY" or the partial "Month YYYY".
inline std::optional<ExtractedDate> match_month_led(std::string_view text,
                                                    std::size_t pos) {
  auto month = match_month_name(text, pos);
  if (!month) return std::nullopt;
  auto after_month = skip_spaces(text, pos + month->second, 1);
  if (!after_month) return std::nullopt;

  if (auto day = match_digits(text, *after_month, 1, 2)) {
    std::size_t p = *after_month + day->second;
    if (day->first >= 1 && day->first <= 31 && p < text.size() && text[p] == ',') {
      if (auto after_comma = skip_spaces(text, p + 1, 0)) {
        if (auto year = match_digits(text, *after_comma, 4, 4)) {
          std::size_t end = *after_comma + year->second;
          if (year->first >= 1 && boundary_after(text, end))
            return ExtractedDate{{day->first, month->first, year->first}, pos, end};
        }
      }
    }
  }
  if (auto year = match_digits(text, *after_month, 4, 4)) {
    std::size_t end = *after_month + year->second;
    if (year->first >= 1 && boundary_after(text, end))
      return ExtractedDate{{0, month->first, year->first}, pos, end};
  }
  return std::nullopt;
}

// "D Month YYYY".
inline std::optional<ExtractedDate> match_day_led(std::string_view text,
                                                  std::size_t pos) {
  auto day = match_digits(text, pos, 1, 2);
  if (!day || day->first < 1 || day->first > 31) return std::nullopt;
  auto after_day = skip_spaces(text, pos + day->second, 1);
  if (!after_day) return std::nullopt;
  auto month = match_month_name(text, *after_day);
  if (!month) return std::nullopt;
  auto after_month = skip_spaces(text, *after_day + month->second, 1);
  if (!after_month) return std::nullopt;
  auto year = match_digits(text, *after_month, 4, 4);
  if (!year || year->first < 1) return std::nullopt;
  std::size_t end = *after_month + year->second;
  if (!boundary_after(text, end)) return std::nullopt;
  return ExtractedDate{{day->first, month->first, year->first}, pos, end};
}

// "YYYY-MM-DD", two-digit month and day.
inline std::optional<ExtractedDate> match_iso(std::string_view text, std::size_t pos) {
  auto year = match_digits(text, pos, 4, 4);
  if (!year || year->first < 1) return std::nullopt;
  std::size_t p = pos + year->second;
  if (p >= text.size() || text[p] != '-') return std::nullopt;
  auto month = match_digits(text, p + 1, 2, 2);
  if (!month || month->first < 1 || month->first > 12) return std::nullopt;
  p = p + 1 + month->second;
  if (p >= text.size() || text[p] != '-') return std::nullopt;
  auto day = match_digits(text, p + 1, 2, 2);
  if (!day || day->first < 1 || day->first > 31) return std::nullopt;
  std::size_t end = p + 1 + day->second;
  if (!boundary_after(text, end)) return std::nullopt;
  return ExtractedDate{{day->first, month->first, year->first}, pos, end};
}

// Bare "YYYY" in 1000..2999.
inline std::optional<ExtractedDate> match_bare_year(std::string_view text,
                                                    std::size_t pos) {
  auto year = match_digits(text, pos, 4, 4);
  if (!year || year->first < 1000 || year->first > 2999) return std::nullopt;
  std::size_t end = pos + year->second;
  if (!boundary_after(text, end)) return std::nullopt;
  return ExtractedDate{{0, 0, year->first}, pos, end};
}

}  // namespace detail

// Greedy left-to-right extraction: at each word-boundary position try all
// formats and keep the longest match, then resume past it. Spans never
// overlap and each re-parses to its value.
inline std::vector<ExtractedDate> extract_dates(std::string_view text) {
  std::vector<ExtractedDate> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!boundary_before(text, i)) {
      ++i;
      continue;
    }
    std::optional<ExtractedDate> best;
    auto consider = [&](std::optional<ExtractedDate> candidate) {
      if (candidate && (!best || candidate->end > best->end)) best = candidate;
    };
    consider(detail::match_month_led(text, i));
    consider(detail::match_day_led(text, i));
    consider(detail::match_iso(text, i));
    consider(detail::match_bare_year(text, i));
    if (best) {
      out.push_back(*best);
      i = best->end;
    } else {
      ++i;
    }
  }
  return out;
}

// Component-intersection comparison: components specified on both sides
// must agree, the intersection must be non-empty, and it must include the
// year. Every supported surface form carries a year, so in practice this
// is "years equal, and day/month equal where both sides have them".
inline bool date_components_match(const DateValue& a, const DateValue& b) {
  if (a.year == 0 || b.year == 0 || a.year != b.year) return false;
  if (a.month != 0 && b.month != 0 && a.month != b.month) return false;
  if (a.day != 0 && b.day != 0 && a.day != b.day) return false;
  return true;
}

inline bool date_matches(const DateValue& triple_date,
                         const std::vector<ExtractedDate>& sentence_dates) {
  for (const auto& d : sentence_dates)
    if (date_components_match(triple_date, d.value)) return true;
  return false;
}

}  // namespace kgverb

#endif  // KGVERB_DATES_HPP_
