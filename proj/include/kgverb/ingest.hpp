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
// Streaming loaders for the three newline-delimited inputs. A malformed
// record is rejected with a line-numbered diagnostic; the rest of the file
// still loads. Strict mode is the caller's policy (fail the run when the
// diagnostic list is non-empty), not the loader's.

#ifndef KGVERB_INGEST_HPP_
#define KGVERB_INGEST_HPP_

#include <cstddef>
#include <istream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "kgverb/core.hpp"
#include "kgverb/records.hpp"
#include "kgverb/sentences.hpp"
#include "kgverb/text.hpp"

namespace kgverb {

struct EntityLoadResult {
  std::vector<EntityRecord> records;
  std::vector<Diagnostic> diagnostics;
};

struct TripleLoadResult {
  std::vector<Triple> triples;
  std::vector<Diagnostic> diagnostics;
};

struct PageLoadResult {
  std::vector<PageText> pages;
  std::vector<Diagnostic> diagnostics;
};

namespace detail {

// Reads one JSON record per line, skipping blank lines. `fn` decodes and
// stores the record; any RecordError or parse error becomes a diagnostic
// for that line.
template <typename Fn>
void for_each_record(std::istream& in, std::vector<Diagnostic>& diags, Fn fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    try {
      json j = json::parse(line);
      fn(j, line_no);
    } catch (const RecordError& e) {
      diags.push_back({line_no, e.what()});
    } catch (const json::exception& e) {
      diags.push_back({line_no, std::string("invalid JSON: ") + e.what()});
    }
  }
}

// Entity references and quantity units must resolve in the catalog, or
// downstream matching has no alias set to work with.
inline void check_object_refs(const ObjectValue& value, const EntityCatalog& catalog,
                              const char* what) {
  if (const auto* ref = std::get_if<EntityRef>(&value)) {
    if (!catalog.contains(ref->id))
      throw RecordError(std::string("unknown ") + what + " entity id '" + ref->id + "'");
  } else if (const auto* q = std::get_if<QuantityValue>(&value)) {
    if (q->unit && !catalog.contains(*q->unit))
      throw RecordError(std::string("unknown ") + what + " quantity unit '" + *q->unit + "'");
  }
}

}  // namespace detail

// Parses entities.jsonl. Catalog-level validation (duplicate ids, alias
// hygiene) is validate_catalog's job; this only rejects records that do
// not decode.
inline EntityLoadResult read_entity_records(std::istream& in) {
  EntityLoadResult result;
  detail::for_each_record(in, result.diagnostics, [&](const json& j, std::size_t) {
    result.records.push_back(entity_from_json(j));
  });
  return result;
}

// Parses triples.jsonl against a validated catalog. Rejects records whose
// subject, object entity, or subproperty entity does not resolve.
inline TripleLoadResult load_triples(std::istream& in, const EntityCatalog& catalog) {
  TripleLoadResult result;
  detail::for_each_record(in, result.diagnostics, [&](const json& j, std::size_t) {
    Triple t = triple_from_json(j);
    if (!catalog.contains(t.subject))
      throw RecordError("unknown subject id '" + t.subject + "'");
    detail::check_object_refs(t.object, catalog, "object");
    for (const auto& sp : t.subproperties)
      detail::check_object_refs(sp.value, catalog, "subproperty");
    result.triples.push_back(std::move(t));
  });
  return result;
}

// Parses pages.jsonl. Root sections are segmented with split_sentences
// unless the record supplies its own `sentences` list. At most one page
// per subject; later duplicates are rejected.
inline PageLoadResult load_pages(std::istream& in, const EntityCatalog& catalog) {
  PageLoadResult result;
  std::unordered_set<std::string> seen;
  detail::for_each_record(in, result.diagnostics, [&](const json& j, std::size_t) {
    bool had_sentences = false;
    PageText p = page_from_json(j, &had_sentences);
    if (!catalog.contains(p.subject))
      throw RecordError("unknown subject id '" + p.subject + "'");
    if (!seen.insert(p.subject).second)
      throw RecordError("duplicate page for subject '" + p.subject + "'");
    if (!had_sentences) p.sentences = split_sentences(p.root_section);
    result.pages.push_back(std::move(p));
  });
  return result;
}

// Immutable view over one loaded corpus. Triples keep input order (stable
// across runs); subject indexes make per-page lookup cheap. Contents are
// a function of the record set, not of input line order.
struct CorpusBundle {
  EntityCatalog entities;
  std::vector<Triple> triples;
  std::vector<PageText> pages;
  std::unordered_map<std::string, std::vector<std::size_t>> triples_by_subject;
  std::unordered_map<std::string, std::size_t> page_by_subject;

  const std::vector<std::size_t>* subject_triples(const std::string& id) const {
    auto it = triples_by_subject.find(id);
    return it == triples_by_subject.end() ? nullptr : &it->second;
  }

  const PageText* subject_page(const std::string& id) const {
    auto it = page_by_subject.find(id);
    return it == page_by_subject.end() ? nullptr : &pages[it->second];
  }
};

inline CorpusBundle make_bundle(EntityCatalog entities, std::vector<Triple> triples,
                                std::vector<PageText> pages) {
  CorpusBundle b;
  b.entities = std::move(entities);
  b.triples = std::move(triples);
  b.pages = std::move(pages);
  for (std::size_t i = 0; i < b.triples.size(); ++i)
    b.triples_by_subject[b.triples[i].subject].push_back(i);
  for (std::size_t i = 0; i < b.pages.size(); ++i)
    b.page_by_subject.emplace(b.pages[i].subject, i);
  return b;
}

}  // namespace kgverb

#endif  // KGVERB_INGEST_HPP_
