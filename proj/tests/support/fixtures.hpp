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
// Shared hand-built corpus used across the suite. Four subjects have a
// one-sentence page that their triples align to; two more subjects carry
// triples without pages so grouping and serialization paths see them too.
// tests/data/sample holds the same corpus as jsonl; test_pipeline checks
// the two stay identical.

#ifndef KGVERB_TESTS_FIXTURES_HPP_
#define KGVERB_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "kgverb/aligner.hpp"
#include "kgverb/core.hpp"
#include "kgverb/ingest.hpp"

namespace kgverb::testing {

inline EntityRecord entity(std::string id, std::string name,
                           std::vector<std::string> extra_aliases = {},
                           bool has_wiki_page = false) {
  EntityRecord rec;
  rec.id = std::move(id);
  rec.canonical_name = name;
  rec.aliases = std::move(extra_aliases);
  rec.aliases.push_back(std::move(name));
  canonicalize_aliases(rec);
  rec.has_wiki_page = has_wiki_page;
  return rec;
}

inline std::vector<EntityRecord> corpus_entities() {
  return {
      entity("anne_frank_film", "Das Tagebuch der Anne Frank", {}, true),
      entity("balaenoptera", "Balaenoptera"),
      entity("blue_whale", "Blue whale", {"blue whale"}, true),
      entity("germany", "Germany"),
      entity("inch", "inch", {"inches"}),
      entity("michelle_obama", "Michelle Obama", {}, true),
      entity("neff_maiava", "Neff Maiava", {"Maiava"}, true),
      entity("obama_campaign_2012", "Barack Obama 2012 presidential campaign", {},
             true),
      entity("photobooks_10x10", "10x10 Photobooks", {}, true),
      entity("professional_wrestler", "professional wrestler"),
      entity("united_states", "United States"),
      entity("universal_pictures", "Universal Pictures"),
  };
}

inline Triple triple(std::string subject, std::string relation, ObjectValue object) {
  Triple t;
  t.subject = std::move(subject);
  t.relation = std::move(relation);
  t.object = std::move(object);
  return t;
}

inline std::vector<Triple> corpus_triples() {
  return {
      triple("anne_frank_film", "distributor", EntityRef{"universal_pictures"}),
      triple("anne_frank_film", "country", EntityRef{"germany"}),
      triple("anne_frank_film", "publication date", DateValue{3, 3, 2016}),
      triple("neff_maiava", "date of birth", DateValue{1, 5, 1924}),
      triple("neff_maiava", "date of death", DateValue{21, 4, 2018}),
      triple("neff_maiava", "occupation", EntityRef{"professional_wrestler"}),
      triple("obama_campaign_2012", "country", EntityRef{"united_states"}),
      triple("obama_campaign_2012", "end time", DateValue{6, 11, 2012}),
      triple("obama_campaign_2012", "start time", DateValue{4, 4, 2011}),
      triple("blue_whale", "parent taxon", EntityRef{"balaenoptera"}),
      triple("michelle_obama", "height", QuantityValue{"+71", "inch"}),
      triple("photobooks_10x10", "inception", DateValue{0, 0, 2012}),
  };
}

inline const char* kAnneFrankSentence =
    "The film was theatrically released in the Germany on March 3, 2016, by "
    "Universal Pictures International.";
inline const char* kMaiavaSentence =
    "Maiava (May 1, 1924 April 21, 2018) was an American Samoan professional "
    "wrestler.";
inline const char* kCampaignSentence =
    "The 2012 reelection campaign of Barack Obama, the 44th President of the "
    "United States, was formally announced on April 4, 2011.";
inline const char* kBlueWhaleSentence =
    "The blue whale (Balaenoptera musculus) is a marine mammal belonging to "
    "the baleen whale suborder Mysticeti.";

inline std::vector<PageText> corpus_pages() {
  std::vector<PageText> pages;
  auto add = [&](std::string subject, std::string text) {
    PageText p;
    p.subject = std::move(subject);
    p.root_section = text;
    p.sentences = {std::move(text)};
    pages.push_back(std::move(p));
  };
  add("anne_frank_film", kAnneFrankSentence);
  add("neff_maiava", kMaiavaSentence);
  add("obama_campaign_2012", kCampaignSentence);
  add("blue_whale", kBlueWhaleSentence);
  return pages;
}

inline CorpusBundle corpus_bundle() {
  CatalogBuildResult built = validate_catalog(corpus_entities());
  return make_bundle(std::move(built.catalog), corpus_triples(), corpus_pages());
}

// The four examples corpus_bundle() must align to, in output order
// (subject id ascending, then sentence index).
inline std::vector<AlignmentExample> expected_examples() {
  auto flat = [](std::string subject, std::string relation, ObjectValue object) {
    return FlatTriple{std::move(subject), std::move(relation), std::move(object)};
  };
  auto example = [](std::string subject, const char* sentence,
                    std::vector<FlatTriple> triples) {
    AlignmentExample ex;
    ex.subject = subject;
    ex.sentence = sentence;
    ex.original_sentence = sentence;
    ex.pronoun_replaced = false;
    ex.triples = std::move(triples);
    ex.page = std::move(subject);
    ex.sentence_index = 0;
    return ex;
  };
  return {
      example("anne_frank_film", kAnneFrankSentence,
              {flat("anne_frank_film", "distributor", EntityRef{"universal_pictures"}),
               flat("anne_frank_film", "country", EntityRef{"germany"}),
               flat("anne_frank_film", "publication date", DateValue{3, 3, 2016})}),
      example("blue_whale", kBlueWhaleSentence,
              {flat("blue_whale", "parent taxon", EntityRef{"balaenoptera"})}),
      example("neff_maiava", kMaiavaSentence,
              {flat("neff_maiava", "date of birth", DateValue{1, 5, 1924}),
               flat("neff_maiava", "date of death", DateValue{21, 4, 2018}),
               flat("neff_maiava", "occupation", EntityRef{"professional_wrestler"})}),
      example("obama_campaign_2012", kCampaignSentence,
              {flat("obama_campaign_2012", "country", EntityRef{"united_states"}),
               flat("obama_campaign_2012", "end time", DateValue{6, 11, 2012}),
               flat("obama_campaign_2012", "start time", DateValue{4, 4, 2011})}),
  };
}

}  // namespace kgverb::testing

#endif  // KGVERB_TESTS_FIXTURES_HPP_
