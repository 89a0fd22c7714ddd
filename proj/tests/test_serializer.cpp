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

#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

#include "kgverb/aligner.hpp"
#include "kgverb/serializer.hpp"
#include "support/fixtures.hpp"

using namespace kgverb;

TEST_CASE("dates render day-padded with optional month", "[serializer]") {
  CHECK(render_date(DateValue{3, 3, 2016}) == "03 March 2016");
  CHECK(render_date(DateValue{1, 5, 1924}) == "01 May 1924");
  CHECK(render_date(DateValue{21, 4, 2018}) == "21 April 2018");
  CHECK(render_date(DateValue{0, 5, 1924}) == "00 May 1924");
  CHECK(render_date(DateValue{0, 0, 2012}) == "00 2012");
}

TEST_CASE("objects render by type", "[serializer]") {
  CorpusBundle bundle = testing::corpus_bundle();
  const EntityCatalog& catalog = bundle.entities;
  CHECK(render_object(EntityRef{"germany"}, catalog) == "Germany");
  CHECK(render_object(QuantityValue{"+71", "inch"}, catalog) == "+71 inch");
  CHECK(render_object(QuantityValue{"12", std::nullopt}, catalog) == "12");
  CHECK(render_object(DateValue{0, 0, 2012}, catalog) == "00 2012");
  CHECK_THROWS_AS(render_object(EntityRef{"ghost"}, catalog), std::invalid_argument);
  CHECK_THROWS_AS(render_object(QuantityValue{"1", "ghost"}, catalog),
                  std::invalid_argument);
}

TEST_CASE("groups serialize to the generator input grammar", "[serializer]") {
  CorpusBundle bundle = testing::corpus_bundle();
  const EntityCatalog& catalog = bundle.entities;
  auto flats = [&](const char* subject) {
    std::vector<FlatTriple> out;
    const auto* indices = bundle.subject_triples(subject);
    REQUIRE(indices != nullptr);
    for (std::size_t idx : *indices)
      for (const auto& f : flatten_subproperties(bundle.triples[idx], catalog))
        out.push_back(f);
    return out;
  };

  CHECK(serialize_triples("michelle_obama", flats("michelle_obama"), catalog) ==
        "Michelle Obama height +71 inch");
  CHECK(serialize_triples("neff_maiava", flats("neff_maiava"), catalog) ==
        "Neff Maiava date of birth 01 May 1924, date of death 21 April 2018, "
        "occupation professional wrestler");
  CHECK(serialize_triples("anne_frank_film", flats("anne_frank_film"), catalog) ==
        "Das Tagebuch der Anne Frank distributor Universal Pictures, country "
        "Germany, publication date 03 March 2016");
  CHECK(serialize_triples("photobooks_10x10", flats("photobooks_10x10"), catalog) ==
        "10x10 Photobooks inception 00 2012");

  TripleGroup group;
  group.subject = "michelle_obama";
  group.triples = flats("michelle_obama");
  CHECK(serialize_group(group, catalog) == "Michelle Obama height +71 inch");

  CHECK_THROWS_AS(serialize_triples("michelle_obama", {}, catalog),
                  std::invalid_argument);
}

TEST_CASE("training pairs carry serialized input and sentence target", "[serializer]") {
  CorpusBundle bundle = testing::corpus_bundle();
  AlignmentResult result = align_corpus(bundle);
  auto pairs = emit_training_pairs(result.examples, bundle.entities);
  REQUIRE(pairs.size() == 4);
  CHECK(pairs[0].first ==
        "Das Tagebuch der Anne Frank distributor Universal Pictures, country "
        "Germany, publication date 03 March 2016");
  CHECK(pairs[0].second == testing::kAnneFrankSentence);
  CHECK(pairs[1].first == "Blue whale parent taxon Balaenoptera");
  CHECK(pairs[2].second == testing::kMaiavaSentence);
  CHECK(pairs[3].second == testing::kCampaignSentence);
}

TEST_CASE("documents merge sentences per subject in order", "[serializer]") {
  std::vector<std::pair<std::string, std::string>> sentences = {
      {"zeta", "Z one."}, {"alpha", "A one."}, {"zeta", "Z two."},
      {"alpha", "A two."}, {"alpha", "A three."}};
  auto docs = package_documents(sentences);
  REQUIRE(docs.size() == 2);
  CHECK(docs[0].subject == "alpha");
  CHECK(docs[0].sentences ==
        std::vector<std::string>{"A one.", "A two.", "A three."});
  CHECK(docs[0].text == "A one.\nA two.\nA three.");
  CHECK(docs[1].subject == "zeta");
  CHECK(docs[1].text == "Z one.\nZ two.");
  CHECK(package_documents({}).empty());
}
