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
// Shared domain types: entities, triples, pages and the entity catalog.
// Everything here is immutable once constructed and safe to share across
// threads.

#ifndef KGVERB_CORE_HPP_
#define KGVERB_CORE_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "kgverb/text.hpp"

namespace kgverb {

// One per-record problem found while parsing or validating an input stream.
// `line` is the 1-based input line, 0 when the diagnostic is not file-bound.
struct Diagnostic {
  std::size_t line = 0;
  std::string message;
};

// Calendar date with 0 as the "unspecified" sentinel for day and month.
// The year is always present and nonzero.
struct DateValue {
  int day = 0;
  int month = 0;
  int year = 0;

  bool operator==(const DateValue&) const = default;
};

inline std::optional<std::string> check_date(const DateValue& d) {
  if (d.year == 0) return "date year is required";
  if (d.year < 0) return "date year out of range";
  if (d.day < 0 || d.day > 31) return "date day out of range";
  if (d.month < 0 || d.month > 12) return "date month out of range";
  if (d.day > 0 && d.month == 0) return "date day given without a month";
  return std::nullopt;
}

// Signed decimal amount kept as the exact source text ("+71" stays "+71"),
// with an optional unit entity whose aliases are the unit surface forms.
struct QuantityValue {
  std::string amount;
  std::optional<std::string> unit;  // entity id

  bool operator==(const QuantityValue&) const = default;
};

inline bool is_valid_amount(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0, dots = 0;
  for (; i < s.size(); ++i) {
    if (is_ascii_digit(s[i])) {
      ++digits;
    } else if (s[i] == '.') {
      ++dots;
    } else {
      return false;
    }
  }
  return digits > 0 && dots <= 1;
}

// True when the amount is a plain (possibly signed) integer.
inline bool is_integral_amount(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!is_ascii_digit(s[i])) return false;
  return true;
}

struct EntityRef {
  std::string id;

  bool operator==(const EntityRef&) const = default;
};

// Exactly one variant is populated, by construction.
using ObjectValue = std::variant<EntityRef, QuantityValue, DateValue>;

inline bool is_entity(const ObjectValue& o) {
  return std::holds_alternative<EntityRef>(o);
}
inline bool is_quantity(const ObjectValue& o) {
  return std::holds_alternative<QuantityValue>(o);
}
inline bool is_date(const ObjectValue& o) {
  return std::holds_alternative<DateValue>(o);
}

struct Subproperty {
  std::string name;
  ObjectValue value;

  bool operator==(const Subproperty&) const = default;
};

// (subject, relation, object) plus optional qualifier subproperties.
struct Triple {
  std::string subject;
  std::string relation;
  ObjectValue object;
  std::vector<Subproperty> subproperties;

  bool operator==(const Triple&) const = default;
};

// Triple after subproperty flattening; relation_phrase may embed the main
// object's name (e.g. "Michelle place of marriage").
struct FlatTriple {
  std::string subject;
  std::string relation_phrase;
  ObjectValue object;

  bool operator==(const FlatTriple&) const = default;
};

// Root section of a subject's page plus its sentence segmentation.
struct PageText {
  std::string subject;
  std::string root_section;
  std::vector<std::string> sentences;

  bool operator==(const PageText&) const = default;
};

// A KG entity: canonical name plus the alias set used for matching.
// Aliases are stored sorted and deduplicated and always contain the
// canonical name.
struct EntityRecord {
  std::string id;
  std::string canonical_name;
  std::vector<std::string> aliases;
  bool has_wiki_page = false;

  bool operator==(const EntityRecord&) const = default;
};

inline void canonicalize_aliases(EntityRecord& rec) {
  std::sort(rec.aliases.begin(), rec.aliases.end());
  rec.aliases.erase(std::unique(rec.aliases.begin(), rec.aliases.end()),
                    rec.aliases.end());
}

// Id-indexed set of entity records. `add` enforces the record invariants
// and reports a violation message instead of inserting.
class EntityCatalog {
 public:
  std::optional<std::string> add(EntityRecord rec,
                                 bool repair_aliases = false) {
    if (rec.id.empty()) return "entity id is empty";
    if (rec.canonical_name.empty())
      return "entity '" + rec.id + "' has an empty canonical name";
    for (const auto& a : rec.aliases) {
      if (a.empty()) return "entity '" + rec.id + "' has an empty alias";
    }
    canonicalize_aliases(rec);
    if (!std::binary_search(rec.aliases.begin(), rec.aliases.end(),
                            rec.canonical_name)) {
      if (!repair_aliases) {
        return "entity '" + rec.id +
               "' alias set does not contain its canonical name";
      }
      rec.aliases.push_back(rec.canonical_name);
      std::sort(rec.aliases.begin(), rec.aliases.end());
    }
    if (index_.count(rec.id) > 0) return "duplicate entity id '" + rec.id + "'";
    index_.emplace(rec.id, records_.size());
    records_.push_back(std::move(rec));
    return std::nullopt;
  }

  const EntityRecord* find(const std::string& id) const {
    auto it = index_.find(id);
    return it == index_.end() ? nullptr : &records_[it->second];
  }

  bool contains(const std::string& id) const { return index_.count(id) > 0; }

  std::size_t size() const { return records_.size(); }
  bool empty() const { return records_.empty(); }

  // Insertion order.
  const std::vector<EntityRecord>& records() const { return records_; }

 private:
  std::vector<EntityRecord> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Builds a catalog from already-parsed records, rejecting invalid ones with
// one diagnostic each. Record i gets line number i+1 so file loaders and
// in-memory callers report positions the same way.
struct CatalogBuildResult {
  EntityCatalog catalog;
  std::vector<Diagnostic> diagnostics;
};

inline CatalogBuildResult validate_catalog(std::vector<EntityRecord> records,
                                           bool repair_aliases = false) {
  CatalogBuildResult out;
  std::size_t line = 0;
  for (auto& rec : records) {
    ++line;
    if (auto err = out.catalog.add(std::move(rec), repair_aliases)) {
      out.diagnostics.push_back({line, *err});
    }
  }
  return out;
}

}  // namespace kgverb

#endif  // KGVERB_CORE_HPP_
