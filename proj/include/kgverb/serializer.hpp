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
// Text rendering for the generator boundary. A group serializes as
// "<subject> <rel_1> <obj_1>, <rel_2> <obj_2>, ..." with canonical entity
// names, zero-padded "DD Month YYYY" dates ("00 2012" when only the year
// is known), and quantity amounts as written. Also packages generated
// sentences into one retrieval document per subject.

#ifndef KGVERB_SERIALIZER_HPP_
#define KGVERB_SERIALIZER_HPP_

#include <cstddef>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kgverb/aligner.hpp"
#include "kgverb/core.hpp"
#include "kgverb/dates.hpp"
#include "kgverb/grouper.hpp"

namespace kgverb {

namespace detail {

inline const EntityRecord& resolve_entity(const EntityCatalog& catalog,
                                          const std::string& id, const char* what) {
  const EntityRecord* rec = catalog.find(id);
  if (!rec)
    throw std::invalid_argument(std::string("unresolved ") + what + " entity id '" + id + "'");
  return *rec;
}

inline std::string capitalized_month(int month) {
  std::string name(kMonthNames[static_cast<std::size_t>(month - 1)]);
  name[0] = static_cast<char>(name[0] - ('a' - 'A'));
  return name;
}

}  // namespace detail

// "DD Month YYYY"; an unknown day renders as "00", an unknown month drops
// the month token ("00 2012").
inline std::string render_date(const DateValue& d) {
  char day[3];
  std::snprintf(day, sizeof(day), "%02d", d.day);
  std::string out(day);
  out += ' ';
  if (d.month != 0) {
    out += detail::capitalized_month(d.month);
    out += ' ';
  }
  out += std::to_string(d.year);
  return out;
}

inline std::string render_object(const ObjectValue& o, const EntityCatalog& catalog) {
  if (const auto* ref = std::get_if<EntityRef>(&o)) {
    return detail::resolve_entity(catalog, ref->id, "object").canonical_name;
  }
  if (const auto* q = std::get_if<QuantityValue>(&o)) {
    std::string out = q->amount;
    if (q->unit) {
      out += ' ';
      out += detail::resolve_entity(catalog, *q->unit, "unit").canonical_name;
    }
    return out;
  }
  return render_date(std::get<DateValue>(o));
}

// Shared body of group and training-pair serialization: subject canonical
// name, then "relation object" items joined by ", ".
inline std::string serialize_triples(const std::string& subject_id,
                                     const std::vector<FlatTriple>& triples,
                                     const EntityCatalog& catalog) {
  if (triples.empty())
    throw std::invalid_argument("serialize: empty triple chain for subject '" + subject_id + "'");
  std::string out = detail::resolve_entity(catalog, subject_id, "subject").canonical_name;
  bool first = true;
  for (const auto& t : triples) {
    out += first ? " " : ", ";
    first = false;
    out += t.relation_phrase;
    out += ' ';
    out += render_object(t.object, catalog);
  }
  return out;
}

inline std::string serialize_group(const TripleGroup& g, const EntityCatalog& catalog) {
  return serialize_triples(g.subject, g.triples, catalog);
}

// One (input, target) pair per example: the example's triples serialized
// in example order, and the final (possibly pronoun-replaced) sentence.
inline std::vector<std::pair<std::string, std::string>> emit_training_pairs(
    const std::vector<AlignmentExample>& examples, const EntityCatalog& catalog) {
  std::vector<std::pair<std::string, std::string>> pairs;
  pairs.reserve(examples.size());
  for (const auto& ex : examples)
    pairs.emplace_back(serialize_triples(ex.subject, ex.triples, catalog), ex.sentence);
  return pairs;
}

struct CorpusDocument {
  std::string subject;
  std::vector<std::string> sentences;  // input order preserved
  std::string text;                    // newline-joined sentences

  bool operator==(const CorpusDocument&) const = default;
};

// Merges generated sentences by subject: one document per distinct
// subject, documents in ascending subject order, sentence order kept.
inline std::vector<CorpusDocument> package_documents(
    const std::vector<std::pair<std::string, std::string>>& sentences) {
  std::map<std::string, std::vector<std::string>> by_subject;
  for (const auto& [subject, text] : sentences) by_subject[subject].push_back(text);
  std::vector<CorpusDocument> docs;
  docs.reserve(by_subject.size());
  for (auto& [subject, texts] : by_subject) {
    CorpusDocument doc;
    doc.subject = subject;
    bool first = true;
    for (const auto& t : texts) {
      if (!first) doc.text += '\n';
      first = false;
      doc.text += t;
    }
    doc.sentences = std::move(texts);
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace kgverb

#endif  // KGVERB_SERIALIZER_HPP_
