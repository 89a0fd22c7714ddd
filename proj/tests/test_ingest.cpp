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
#include <random>
#include <sstream>

#include <catch2/catch_amalgamated.hpp>

#include "kgverb/ingest.hpp"
#include "kgverb/records.hpp"
#include "support/fixtures.hpp"

using namespace kgverb;

namespace {

EntityCatalog small_catalog() {
  return validate_catalog({testing::entity("s", "Subject"),
                           testing::entity("o", "Object"),
                           testing::entity("u", "unit")})
      .catalog;
}

}  // namespace

TEST_CASE("entity reader records line numbers for bad rows", "[ingest]") {
  std::istringstream in(
      "{\"id\":\"a\",\"name\":\"A\",\"aliases\":[\"A\"]}\n"
      "not json\n"
      "\n"
      "{\"id\":\"b\",\"name\":\"B\",\"aliases\":[\"B\"]}\n"
      "{\"id\":\"c\"}\n");
  EntityLoadResult result = read_entity_records(in);
  CHECK(result.records.size() == 2);
  REQUIRE(result.diagnostics.size() == 2);
  CHECK(result.diagnostics[0].line == 2);
  CHECK(result.diagnostics[1].line == 5);
}

TEST_CASE("triple loading rejects unresolved references", "[ingest]") {
  EntityCatalog catalog = small_catalog();
  std::istringstream in(
      R"({"subject":"s","relation":"r1","object":{"entity":"o"}})"
      "\n"
      R"({"subject":"ghost","relation":"r1","object":{"entity":"o"}})"
      "\n"
      R"({"subject":"s","relation":"r2","object":{"entity":"ghost"}})"
      "\n"
      R"({"subject":"s","relation":"r3","object":{"quantity":{"amount":"2","unit":"ghost"}}})"
      "\n"
      R"({"subject":"s","relation":"r4","object":{"quantity":{"amount":"2","unit":"u"}}})"
      "\n"
      R"({"subject":"s","relation":"r5","object":{"entity":"o"},"subproperties":[{"name":"n","value":{"entity":"ghost"}}]})"
      "\n");
  TripleLoadResult result = load_triples(in, catalog);
  CHECK(result.triples.size() == 2);
  REQUIRE(result.diagnostics.size() == 4);
  CHECK(result.diagnostics[0].line == 2);
  CHECK(result.diagnostics[1].line == 3);
  CHECK(result.diagnostics[2].line == 4);
  CHECK(result.diagnostics[3].line == 6);
}

TEST_CASE("malformed rows fail only themselves", "[ingest]") {
  EntityCatalog catalog = small_catalog();
  std::istringstream in(
      R"({"subject":"s","relation":"r","object":{"date":{"day":40,"month":1,"year":2000}}})"
      "\n"
      R"({"subject":"s","relation":"r","object":{"quantity":{"amount":"x1","unit":null}}})"
      "\n"
      R"({"subject":"s","relation":"ok","object":{"entity":"o"}})"
      "\n");
  TripleLoadResult result = load_triples(in, catalog);
  REQUIRE(result.triples.size() == 1);
  CHECK(result.triples[0].relation == "ok");
  CHECK(result.diagnostics.size() == 2);
}

TEST_CASE("page loading splits unless presplit sentences are given", "[ingest]") {
  EntityCatalog catalog = small_catalog();
  std::istringstream in(
      R"({"subject":"s","root_section":"A b. C d."})"
      "\n"
      R"({"subject":"o","root_section":"A b. C d.","sentences":["A b. C d."]})"
      "\n");
  PageLoadResult result = load_pages(in, catalog);
  REQUIRE(result.pages.size() == 2);
  CHECK(result.pages[0].sentences == std::vector<std::string>{"A b.", "C d."});
  CHECK(result.pages[1].sentences == std::vector<std::string>{"A b. C d."});
  CHECK(result.diagnostics.empty());
}

TEST_CASE("page loading rejects unknown and duplicate subjects", "[ingest]") {
  EntityCatalog catalog = small_catalog();
  std::istringstream in(
      R"({"subject":"ghost","root_section":"Text."})"
      "\n"
      R"({"subject":"s","root_section":"First."})"
      "\n"
      R"({"subject":"s","root_section":"Second."})"
      "\n");
  PageLoadResult result = load_pages(in, catalog);
  REQUIRE(result.pages.size() == 1);
  CHECK(result.pages[0].root_section == "First.");
  REQUIRE(result.diagnostics.size() == 2);
  CHECK(result.diagnostics[0].line == 1);
  CHECK(result.diagnostics[1].line == 3);
}

TEST_CASE("accepted records do not depend on record order", "[ingest]") {
  EntityCatalog catalog = small_catalog();
  std::vector<std::string> rows = {
      R"({"subject":"s","relation":"a","object":{"entity":"o"}})",
      R"({"subject":"ghost","relation":"b","object":{"entity":"o"}})",
      R"({"subject":"s","relation":"c","object":{"date":{"day":0,"month":0,"year":1999}}})",
      R"(broken)",
      R"({"subject":"o","relation":"d","object":{"quantity":{"amount":"7","unit":"u"}}})",
  };
  std::mt19937 rng(7);
  auto load = [&](const std::vector<std::string>& ordering) {
    std::string text;
    for (const auto& row : ordering) text += row + "\n";
    std::istringstream in(text);
    TripleLoadResult r = load_triples(in, catalog);
    std::vector<std::string> relations;
    for (const auto& t : r.triples) relations.push_back(t.relation);
    std::sort(relations.begin(), relations.end());
    return std::pair(relations, r.diagnostics.size());
  };
  auto baseline = load(rows);
  for (int round = 0; round < 20; ++round) {
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(load(rows) == baseline);
  }
}

TEST_CASE("bundle lookups find triples and pages by subject", "[ingest]") {
  CorpusBundle bundle = testing::corpus_bundle();
  REQUIRE(bundle.subject_triples("neff_maiava") != nullptr);
  CHECK(bundle.subject_triples("neff_maiava")->size() == 3);
  CHECK(bundle.subject_triples("nobody") == nullptr);
  REQUIRE(bundle.subject_page("blue_whale") != nullptr);
  CHECK(bundle.subject_page("blue_whale")->sentences.size() == 1);
  CHECK(bundle.subject_page("michelle_obama") == nullptr);
}
