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
// Object matching engines. Entities match when any alias occurs word
// bounded in the sentence, quantities match through amount-unit surface
// forms, dates through extraction plus component comparison. CatalogIndex
// compiles every alias in the catalog into one automaton so a sentence is
// scanned once no matter how many triples are asked about it.

#ifndef KGVERB_MATCHERS_HPP_
#define KGVERB_MATCHERS_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "kgverb/alias_index.hpp"
#include "kgverb/core.hpp"
#include "kgverb/dates.hpp"
#include "kgverb/text.hpp"

namespace kgverb {

// Canonical name plus aliases, exact-string deduplicated. This is the
// full surface-form set used for matching an entity in text.
inline std::vector<std::string> entity_alias_set(const EntityRecord& rec) {
  std::vector<std::string> out;
  out.push_back(rec.canonical_name);
  for (const auto& a : rec.aliases)
    if (a != rec.canonical_name) out.push_back(a);
  return out;
}

// True iff some alias occurs in the sentence, case-insensitive, with word
// boundaries on both sides. Naive per-alias scan; fine for small sets and
// the reference semantics for AliasIndex.
inline bool contains_alias(std::string_view sentence,
                           const std::vector<std::string>& aliases) {
  for (const auto& alias : aliases)
    if (contains_word_bounded(sentence, alias)) return true;
  return false;
}

// Amount as written, plus the unsigned form for integral amounts ("+71"
// also matches as "71"; graph values carry signs, prose does not).
inline std::vector<std::string> amount_forms(const std::string& amount) {
  std::vector<std::string> forms{amount};
  if (is_integral_amount(amount) && (amount[0] == '+' || amount[0] == '-')) {
    forms.push_back(amount.substr(1));
  }
  return forms;
}

// Cross product of amount forms and unit aliases, "amount alias" with a
// single space; just the amount forms when unitless. The unit refers to a
// catalog entity whose alias set supplies the unit spellings.
inline std::vector<std::string> quantity_surface_forms(const QuantityValue& q,
                                                       const EntityCatalog& catalog) {
  std::vector<std::string> amounts = amount_forms(q.amount);
  if (!q.unit) return amounts;
  const EntityRecord* unit = catalog.find(*q.unit);
  if (!unit) throw std::invalid_argument("unresolved quantity unit '" + *q.unit + "'");
  std::vector<std::string> out;
  for (const auto& alias : entity_alias_set(*unit))
    for (const auto& amount : amounts) out.push_back(amount + " " + alias);
  return out;
}

// All catalog aliases compiled into one automaton. Payloads are slots,
// i.e. positions in catalog.records(). Immutable once built.
class CatalogIndex {
 public:
  CatalogIndex() = default;

  explicit CatalogIndex(const EntityCatalog& catalog) : catalog_(&catalog) {
    AliasIndex::Builder builder;
    const auto& records = catalog.records();
    for (std::size_t slot = 0; slot < records.size(); ++slot) {
      slots_.emplace(records[slot].id, static_cast<std::uint32_t>(slot));
      for (const auto& alias : entity_alias_set(records[slot]))
        builder.add(alias, static_cast<std::uint32_t>(slot));
    }
    index_ = builder.build();
  }

  const EntityCatalog& catalog() const { return *catalog_; }

  std::optional<std::uint32_t> slot(const std::string& id) const {
    auto it = slots_.find(id);
    if (it == slots_.end()) return std::nullopt;
    return it->second;
  }

  // Sorted slots of all entities whose alias occurs word-bounded in the
  // sentence.
  std::vector<std::uint32_t> entities_in(std::string_view sentence) const {
    return index_.collect(sentence);
  }

 private:
  const EntityCatalog* catalog_ = nullptr;
  AliasIndex index_;
  std::unordered_map<std::string, std::uint32_t> slots_;
};

// One sentence scanned once: which entities it mentions and which dates
// it contains. Shared by every triple matched against that sentence.
struct SentenceScan {
  std::vector<std::uint32_t> entity_slots;  // sorted
  std::vector<ExtractedDate> dates;

  bool has_slot(std::uint32_t slot) const {
    return std::binary_search(entity_slots.begin(), entity_slots.end(), slot);
  }
};

inline SentenceScan scan_sentence(std::string_view sentence, const CatalogIndex& index) {
  return SentenceScan{index.entities_in(sentence), extract_dates(sentence)};
}

// Dispatch without an index: per-alias scans and a fresh date extraction.
inline bool match_triple(std::string_view sentence, const FlatTriple& triple,
                         const EntityCatalog& catalog) {
  if (const auto* ref = std::get_if<EntityRef>(&triple.object)) {
    const EntityRecord* rec = catalog.find(ref->id);
    if (!rec) return false;
    return contains_alias(sentence, entity_alias_set(*rec));
  }
  if (const auto* q = std::get_if<QuantityValue>(&triple.object)) {
    return contains_alias(sentence, quantity_surface_forms(*q, catalog));
  }
  return date_matches(std::get<DateValue>(triple.object), extract_dates(sentence));
}

// Dispatch against a precomputed scan. Entity and date checks reuse the
// scan; quantity surface forms are sentence-specific strings and keep the
// direct containment check.
inline bool match_triple(const SentenceScan& scan, std::string_view sentence,
                         const FlatTriple& triple, const CatalogIndex& index) {
  if (const auto* ref = std::get_if<EntityRef>(&triple.object)) {
    auto slot = index.slot(ref->id);
    return slot && scan.has_slot(*slot);
  }
  if (const auto* q = std::get_if<QuantityValue>(&triple.object)) {
    return contains_alias(sentence, quantity_surface_forms(*q, index.catalog()));
  }
  return date_matches(std::get<DateValue>(triple.object), scan.dates);
}

// Convenience form matching the one-shot signature.
inline bool match_triple(std::string_view sentence, const FlatTriple& triple,
                         const CatalogIndex& index) {
  SentenceScan scan = scan_sentence(sentence, index);
  return match_triple(scan, sentence, triple, index);
}

}  // namespace kgverb

#endif  // KGVERB_MATCHERS_HPP_
