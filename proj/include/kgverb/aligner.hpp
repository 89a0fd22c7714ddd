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
// Distant-supervision alignment of triples to page sentences. Each page
// contributes only triples of its own subject, every sentence is scanned
// once, and all triples matching a sentence become one training example.
// When the sentence never names the subject, the first animate
// third-person pronoun is swapped for the subject's canonical name so the
// example is self-contained.

#ifndef KGVERB_ALIGNER_HPP_
#define KGVERB_ALIGNER_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "kgverb/core.hpp"
#include "kgverb/ingest.hpp"
#include "kgverb/matchers.hpp"
#include "kgverb/parallel.hpp"
#include "kgverb/text.hpp"

namespace kgverb {

struct AlignmentExample {
  std::string subject;
  std::string sentence;           // final text, possibly pronoun-replaced
  std::string original_sentence;  // page text as segmented
  bool pronoun_replaced = false;
  std::vector<FlatTriple> triples;  // non-empty, all matching original_sentence
  std::string page;                 // provenance: page subject id
  std::size_t sentence_index = 0;   // provenance: 0-based index within page

  bool operator==(const AlignmentExample&) const = default;
};

struct AlignmentStats {
  std::uint64_t total_triples = 0;      // flattened triple instances
  std::uint64_t triples_aligned = 0;    // distinct instances aligned >= once
  std::uint64_t sentences_selected = 0; // emitted examples
  std::uint64_t total_relations = 0;    // distinct relation phrases
  std::uint64_t relations_aligned = 0;  // distinct relation phrases aligned

  bool operator==(const AlignmentStats&) const = default;
};

// Main triple first, then one flat triple per subproperty with the main
// object's canonical name folded into the relation phrase. Subproperties
// hanging off a quantity or date object have no name to fold in; they are
// dropped with a diagnostic, the main triple survives.
inline std::vector<FlatTriple> flatten_subproperties(const Triple& t,
                                                     const EntityCatalog& catalog,
                                                     std::vector<Diagnostic>* diags = nullptr) {
  std::vector<FlatTriple> out;
  out.push_back({t.subject, t.relation, t.object});
  if (t.subproperties.empty()) return out;
  const auto* ref = std::get_if<EntityRef>(&t.object);
  const EntityRecord* rec = ref ? catalog.find(ref->id) : nullptr;
  for (const auto& sp : t.subproperties) {
    if (!rec) {
      if (diags)
        diags->push_back({0, "dropped subproperty '" + sp.name + "' on (" + t.subject +
                                 ", " + t.relation + "): object has no entity name"});
      continue;
    }
    out.push_back({t.subject, rec->canonical_name + " " + sp.name, sp.value});
  }
  return out;
}

namespace detail {

inline constexpr std::array<std::string_view, 3> kPersonalPronouns = {"he", "she",
                                                                      "him"};

// Words after which "her" reads as an object pronoun rather than a
// determiner: auxiliaries, common verbs, and function words that cannot
// head a possessed noun phrase.
inline constexpr std::array<std::string_view, 46> kHerLookaheadStop = {
    "is",   "was",   "are",  "were",  "be",   "been", "being", "has",
    "had",  "have",  "will", "would", "shall", "should", "can", "could",
    "may",  "might", "must", "do",    "does", "did",  "the",  "a",
    "an",   "to",    "in",   "on",    "at",   "for",  "with", "from",
    "by",   "as",    "of",   "about", "and",  "or",   "but",  "that",
    "when", "while", "not",  "then",  "also", "later",
};

// "her" counts as possessive iff whitespace then a word not in the
// stoplist follows; trailing punctuation or end of sentence reads as the
// object pronoun.
inline bool her_is_possessive(std::string_view text, std::size_t after) {
  std::size_t p = after;
  while (p < text.size() && is_ascii_space(text[p])) ++p;
  if (p == after) return false;
  if (p >= text.size() || !is_word_byte(text[p])) return false;
  std::size_t q = p;
  while (q < text.size() && is_word_byte(text[q])) ++q;
  std::string word = lower_copy(text.substr(p, q - p));
  for (std::string_view stop : kHerLookaheadStop)
    if (word == stop) return false;
  return true;
}

}  // namespace detail

// Replaces the first of he/she/him/her/his/hers (word-bounded, case
// insensitive) with the subject name; possessive forms get "'s". Returns
// the sentence unchanged when no pronoun occurs.
inline std::pair<std::string, bool> replace_pronoun(std::string_view sentence,
                                                    std::string_view subject_name) {
  std::size_t i = 0;
  while (i < sentence.size()) {
    if (!is_word_byte(sentence[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < sentence.size() && is_word_byte(sentence[j])) ++j;
    std::string token = lower_copy(sentence.substr(i, j - i));

    bool personal = false;
    bool possessive = false;
    if (token == "his") {
      possessive = true;
    } else if (token == "hers") {
      possessive = true;
    } else if (token == "her") {
      possessive = detail::her_is_possessive(sentence, j);
      personal = !possessive;
    } else {
      for (std::string_view p : detail::kPersonalPronouns)
        if (token == p) personal = true;
    }

    if (personal || possessive) {
      std::string out;
      out.reserve(sentence.size() + subject_name.size());
      out.append(sentence.substr(0, i));
      out.append(subject_name);
      if (possessive) out.append("'s");
      out.append(sentence.substr(j));
      return {std::move(out), true};
    }
    i = j;
  }
  return {std::string(sentence), false};
}

namespace detail {

struct PageAlignment {
  std::vector<AlignmentExample> examples;
  std::vector<std::vector<std::size_t>> matched;  // per example: flat indices
};

// flats carries (caller-scoped id, triple) pairs so corpus stats can tell
// instances apart; matched reports those ids per emitted example.
inline PageAlignment align_page_impl(const PageText& page,
                                     const std::vector<std::pair<std::size_t, const FlatTriple*>>& flats,
                                     const CatalogIndex& index) {
  PageAlignment out;
  if (flats.empty()) return out;
  auto subject_slot = index.slot(page.subject);
  const EntityRecord* subject_rec = index.catalog().find(page.subject);

  for (std::size_t s = 0; s < page.sentences.size(); ++s) {
    const std::string& sentence = page.sentences[s];
    SentenceScan scan = scan_sentence(sentence, index);

    AlignmentExample ex;
    std::vector<std::size_t> matched_ids;
    for (const auto& [id, flat] : flats) {
      if (match_triple(scan, sentence, *flat, index)) {
        ex.triples.push_back(*flat);
        matched_ids.push_back(id);
      }
    }
    if (ex.triples.empty()) continue;

    ex.subject = page.subject;
    ex.original_sentence = sentence;
    ex.page = page.subject;
    ex.sentence_index = s;
    bool subject_mentioned = subject_slot && scan.has_slot(*subject_slot);
    if (subject_mentioned || !subject_rec) {
      ex.sentence = sentence;
      ex.pronoun_replaced = false;
    } else {
      auto [text, replaced] = replace_pronoun(sentence, subject_rec->canonical_name);
      ex.sentence = std::move(text);
      ex.pronoun_replaced = replaced;
    }
    out.examples.push_back(std::move(ex));
    out.matched.push_back(std::move(matched_ids));
  }
  return out;
}

}  // namespace detail

// One page against its subject's triples. Triples of a different subject
// violate the precondition and are reported, not silently matched.
inline std::vector<AlignmentExample> align_page(const PageText& page,
                                                const std::vector<Triple>& subject_triples,
                                                const CatalogIndex& index,
                                                std::vector<Diagnostic>* diags = nullptr) {
  std::vector<FlatTriple> flats;
  for (const auto& t : subject_triples) {
    if (t.subject != page.subject)
      throw std::invalid_argument("align_page: triple subject '" + t.subject +
                                  "' does not match page subject '" + page.subject + "'");
    for (auto& f : flatten_subproperties(t, index.catalog(), diags))
      flats.push_back(std::move(f));
  }
  std::vector<std::pair<std::size_t, const FlatTriple*>> refs;
  refs.reserve(flats.size());
  for (std::size_t i = 0; i < flats.size(); ++i) refs.emplace_back(i, &flats[i]);
  return detail::align_page_impl(page, refs, index).examples;
}

struct AlignmentResult {
  std::vector<AlignmentExample> examples;
  AlignmentStats stats;
  std::vector<Diagnostic> diagnostics;
};

// Aligns every page, in subject-id order, against the whole bundle.
// Pages run in parallel; the merge walks fixed slots so output bytes do
// not depend on the worker count. Stats count flattened instances, so
// subjects without pages still contribute to the totals.
inline AlignmentResult align_corpus_indexed(const CorpusBundle& bundle,
                                            const CatalogIndex& index,
                                            unsigned workers = 1) {
  AlignmentResult result;

  // Flatten everything once, in triple input order.
  std::vector<FlatTriple> all_flats;
  std::unordered_map<std::string, std::vector<std::size_t>> flats_by_subject;
  for (const auto& t : bundle.triples) {
    auto flats = flatten_subproperties(t, bundle.entities, &result.diagnostics);
    auto& ids = flats_by_subject[t.subject];
    for (auto& f : flats) {
      ids.push_back(all_flats.size());
      all_flats.push_back(std::move(f));
    }
  }

  std::vector<std::size_t> page_order(bundle.pages.size());
  for (std::size_t i = 0; i < page_order.size(); ++i) page_order[i] = i;
  std::sort(page_order.begin(), page_order.end(), [&](std::size_t a, std::size_t b) {
    return bundle.pages[a].subject < bundle.pages[b].subject;
  });

  std::vector<detail::PageAlignment> slots(page_order.size());
  parallel_for(page_order.size(), workers, [&](std::size_t k) {
    const PageText& page = bundle.pages[page_order[k]];
    std::vector<std::pair<std::size_t, const FlatTriple*>> refs;
    if (auto it = flats_by_subject.find(page.subject); it != flats_by_subject.end()) {
      refs.reserve(it->second.size());
      for (std::size_t id : it->second) refs.emplace_back(id, &all_flats[id]);
    }
    slots[k] = detail::align_page_impl(page, refs, index);
  });

  std::vector<bool> aligned(all_flats.size(), false);
  for (auto& slot : slots) {
    for (std::size_t e = 0; e < slot.examples.size(); ++e) {
      for (std::size_t id : slot.matched[e]) aligned[id] = true;
      result.examples.push_back(std::move(slot.examples[e]));
    }
  }

  std::unordered_set<std::string> relations;
  std::unordered_set<std::string> relations_hit;
  for (std::size_t i = 0; i < all_flats.size(); ++i) {
    relations.insert(all_flats[i].relation_phrase);
    if (aligned[i]) {
      relations_hit.insert(all_flats[i].relation_phrase);
      ++result.stats.triples_aligned;
    }
  }
  result.stats.total_triples = all_flats.size();
  result.stats.sentences_selected = result.examples.size();
  result.stats.total_relations = relations.size();
  result.stats.relations_aligned = relations_hit.size();
  return result;
}

inline AlignmentResult align_corpus(const CorpusBundle& bundle, unsigned workers = 1) {
  CatalogIndex index(bundle.entities);
  return align_corpus_indexed(bundle, index, workers);
}

}  // namespace kgverb

#endif  // KGVERB_ALIGNER_HPP_
