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

#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include "kgverb/report.hpp"
#include "support/fixtures.hpp"

using namespace kgverb;

TEST_CASE("thousands separators", "[report]") {
  CHECK(format_thousands(0) == "0");
  CHECK(format_thousands(7) == "7");
  CHECK(format_thousands(999) == "999");
  CHECK(format_thousands(1000) == "1,000");
  CHECK(format_thousands(45578261) == "45,578,261");
  CHECK(format_thousands(1522) == "1,522");
}

TEST_CASE("alignment summary renders five labeled rows", "[report]") {
  AlignmentStats stats;
  stats.total_triples = 45578261;
  stats.triples_aligned = 16090457;
  stats.sentences_selected = 7978814;
  stats.total_relations = 1522;
  stats.relations_aligned = 663;

  std::string text = report_alignment_text(stats);
  CHECK(text.find("Total triples") != std::string::npos);
  CHECK(text.find("45,578,261") != std::string::npos);
  CHECK(text.find("Triples aligned") != std::string::npos);
  CHECK(text.find("16,090,457") != std::string::npos);
  CHECK(text.find("Sentences selected") != std::string::npos);
  CHECK(text.find("7,978,814") != std::string::npos);
  CHECK(text.find("Total relations") != std::string::npos);
  CHECK(text.find("1,522") != std::string::npos);
  CHECK(text.find("Relations aligned") != std::string::npos);
  CHECK(text.find("663") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 5);
}

TEST_CASE("alignment stats round trip through json", "[report]") {
  AlignmentStats stats;
  stats.total_triples = 12;
  stats.triples_aligned = 10;
  stats.sentences_selected = 4;
  stats.total_relations = 11;
  stats.relations_aligned = 9;
  json j = alignment_stats_to_json(stats);
  CHECK(j.at("total_triples") == 12);
  CHECK(j.at("triples_aligned") == 10);
  CHECK(j.at("sentences_selected") == 4);
  CHECK(j.at("total_relations") == 11);
  CHECK(j.at("relations_aligned") == 9);
  CHECK(alignment_stats_from_json(j) == stats);
}

TEST_CASE("grouping report counts sizes and the mean ratio", "[report]") {
  auto group_of_size = [](std::size_t n) {
    TripleGroup g;
    g.subject = "s";
    for (std::size_t i = 0; i < n; ++i)
      g.triples.push_back({"s", "r" + std::to_string(i), EntityRef{"x"}});
    return g;
  };
  std::vector<TripleGroup> groups = {group_of_size(1), group_of_size(1),
                                     group_of_size(3), group_of_size(5)};
  GroupingReport report = report_grouping(groups);
  CHECK(report.groups == 4);
  CHECK(report.triples == 10);
  CHECK(report.triples_per_group == 2.5);
  REQUIRE(report.histogram.size() == 3);
  CHECK(report.histogram.at(1) == 2);
  CHECK(report.histogram.at(3) == 1);
  CHECK(report.histogram.at(5) == 1);

  std::string text = report_grouping_text(report);
  CHECK(text.find("Groups") != std::string::npos);
  CHECK(text.find("Triples per group") != std::string::npos);
  CHECK(text.find("2.50") != std::string::npos);
  CHECK(text.find("Chains of length 1") != std::string::npos);
  CHECK(text.find("Chains of length 5") != std::string::npos);

  json j = grouping_report_to_json(report);
  CHECK(j.at("groups") == 4);
  CHECK(j.at("triples") == 10);
  CHECK(j.at("triples_per_group") == 2.5);
  CHECK(j.at("histogram").at("1") == 2);
  CHECK(j.at("histogram").at("5") == 1);
}

TEST_CASE("empty grouping report stays well formed", "[report]") {
  GroupingReport report = report_grouping({});
  CHECK(report.groups == 0);
  CHECK(report.triples == 0);
  CHECK(report.triples_per_group == 0.0);
  json j = grouping_report_to_json(report);
  CHECK(j.at("histogram").is_object());
  CHECK(j.at("histogram").empty());
}
