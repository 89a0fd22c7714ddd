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

#include <catch2/catch_amalgamated.hpp>

#include "kgverb/dates.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace kgverb;

namespace {

std::vector<DateValue> values_in(const std::string& text) {
  std::vector<DateValue> out;
  for (const auto& m : extract_dates(text)) out.push_back(m.value);
  return out;
}

}  // namespace

TEST_CASE("all five surface formats parse", "[dates]") {
  CHECK(values_in("March 3, 2016") == std::vector<DateValue>{{3, 3, 2016}});
  CHECK(values_in("21 April 2018") == std::vector<DateValue>{{21, 4, 2018}});
  CHECK(values_in("2016-03-03") == std::vector<DateValue>{{3, 3, 2016}});
  CHECK(values_in("May 1924") == std::vector<DateValue>{{0, 5, 1924}});
  CHECK(values_in("founded in 2012") == std::vector<DateValue>{{0, 0, 2012}});
}

TEST_CASE("page sentences from the corpus", "[dates]") {
  CHECK(values_in(testing::kMaiavaSentence) ==
        std::vector<DateValue>{{1, 5, 1924}, {21, 4, 2018}});
  CHECK(values_in("10x10 Photobooks, founded in 2012 is a nonprofit organization.") ==
        std::vector<DateValue>{{0, 0, 2012}});
  CHECK(values_in(testing::kCampaignSentence) ==
        std::vector<DateValue>{{0, 0, 2012}, {4, 4, 2011}});
}

TEST_CASE("month names are case insensitive and must be whole words", "[dates]") {
  CHECK(values_in("MARCH 3, 2016") == std::vector<DateValue>{{3, 3, 2016}});
  CHECK(values_in("march 2016") == std::vector<DateValue>{{0, 3, 2016}});
  CHECK(values_in("The Mayflower sailed").empty());
  CHECK(values_in("Juneverse 2020") == std::vector<DateValue>{{0, 0, 2020}});
}

TEST_CASE("month led form requires the comma", "[dates]") {
  CHECK(values_in("May 1 1924") == std::vector<DateValue>{{0, 0, 1924}});
  CHECK(values_in("May 1,1924") == std::vector<DateValue>{{1, 5, 1924}});
  CHECK(values_in("May 1,  1924") == std::vector<DateValue>{{1, 5, 1924}});
}

TEST_CASE("iso form needs two digit month and day", "[dates]") {
  CHECK(values_in("2016-3-3") == std::vector<DateValue>{{0, 0, 2016}});
  CHECK(values_in("2016-13-01") == std::vector<DateValue>{{0, 0, 2016}});
  // Ranges are checked per component; the matcher is not calendar-aware.
  CHECK(values_in("2016-02-31") == std::vector<DateValue>{{31, 2, 2016}});
  CHECK(values_in("2016-00-10") == std::vector<DateValue>{{0, 0, 2016}});
}

TEST_CASE("bare years are bounded and word bounded", "[dates]") {
  CHECK(values_in("in 999 words").empty());
  CHECK(values_in("year 3000 plan").empty());
  CHECK(values_in("1000 and 2999") ==
        std::vector<DateValue>{{0, 0, 1000}, {0, 0, 2999}});
  CHECK(values_in("x2012").empty());
  CHECK(values_in("2012x").empty());
  CHECK(values_in("10x10").empty());
  CHECK(values_in("20125").empty());
}

TEST_CASE("longest match wins and scanning resumes after it", "[dates]") {
  CHECK(values_in("April 4, 2011") == std::vector<DateValue>{{4, 4, 2011}});
  CHECK(values_in("April 2011 and 4 May 2012") ==
        std::vector<DateValue>{{0, 4, 2011}, {4, 5, 2012}});
  CHECK(values_in("32 April 2018") == std::vector<DateValue>{{0, 4, 2018}});
}

TEST_CASE("match positions cover the consumed text", "[dates]") {
  std::string text = "Born May 1, 1924 here";
  auto matches = extract_dates(text);
  REQUIRE(matches.size() == 1);
  CHECK(text.substr(matches[0].begin, matches[0].end - matches[0].begin) ==
        "May 1, 1924");
}

TEST_CASE("component agreement for date matching", "[dates]") {
  CHECK(date_components_match({6, 11, 2012}, {0, 0, 2012}));
  CHECK(date_components_match({0, 0, 2012}, {6, 11, 2012}));
  CHECK(date_components_match({3, 3, 2016}, {3, 3, 2016}));
  CHECK_FALSE(date_components_match({1, 5, 1924}, {1, 5, 1925}));
  CHECK_FALSE(date_components_match({1, 5, 1924}, {2, 5, 1924}));
  CHECK_FALSE(date_components_match({1, 5, 1924}, {1, 6, 1924}));
  CHECK_FALSE(date_components_match({0, 0, 0}, {0, 0, 0}));

  std::vector<ExtractedDate> sentence_dates = {{{1, 5, 1924}, 0, 0},
                                               {{21, 4, 2018}, 0, 0}};
  CHECK(date_matches(DateValue{1, 5, 1924}, sentence_dates));
  CHECK(date_matches(DateValue{0, 0, 2018}, sentence_dates));
  CHECK_FALSE(date_matches(DateValue{2, 5, 1924}, sentence_dates));
  CHECK_FALSE(date_matches(DateValue{1, 5, 1930}, sentence_dates));
}

TEST_CASE("generated surface forms parse back to their source value", "[dates]") {
  testing::Rng rng(20260815);
  for (int round = 0; round < 500; ++round) {
    testing::DateCase c = testing::make_date_case(rng);
    std::string text = testing::embed_date(rng, c.text);
    INFO("text: " << text);
    auto found = values_in(text);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == c.value);
  }
}

TEST_CASE("spans are ordered, disjoint, and re-parse to their value", "[dates]") {
  testing::Rng rng(99);
  for (int round = 0; round < 200; ++round) {
    testing::DateCase a = testing::make_date_case(rng);
    testing::DateCase b = testing::make_date_case(rng);
    std::string text =
        testing::embed_date(rng, a.text) + " " + testing::embed_date(rng, b.text);
    INFO("text: " << text);
    auto matches = extract_dates(text);
    REQUIRE(matches.size() == 2);
    CHECK(matches[0].value == a.value);
    CHECK(matches[1].value == b.value);
    CHECK(matches[0].end <= matches[1].begin);
    for (const auto& m : matches) {
      auto inner = extract_dates(text.substr(m.begin, m.end - m.begin));
      REQUIRE(inner.size() == 1);
      CHECK(inner[0].value == m.value);
    }
  }
}

TEST_CASE("component agreement is symmetric", "[dates]") {
  testing::Rng rng(7);
  for (int round = 0; round < 500; ++round) {
    DateValue a{static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3)),
                static_cast<int>(rng.between(2000, 2002))};
    DateValue b{static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3)),
                static_cast<int>(rng.between(2000, 2002))};
    if (rng.chance(0.2)) b.year = 0;
    CHECK(date_components_match(a, b) == date_components_match(b, a));
  }
}
