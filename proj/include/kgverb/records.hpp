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
// JSON encoding of the newline-delimited record formats. Decoding throws
// RecordError with a message naming the offending field; loaders turn that
// into a line-numbered Diagnostic. Encoding uses ordered_json so emitted
// key order matches the documented schemas byte for byte.

#ifndef KGVERB_RECORDS_HPP_
#define KGVERB_RECORDS_HPP_

#include <stdexcept>
#include <string>

#include "kgverb/core.hpp"
#include "json.hpp"

namespace kgverb {

using json = nlohmann::ordered_json;

struct RecordError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline const json& require_field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw RecordError(std::string("missing field '") + key + "'");
  return *it;
}

inline std::string require_string(const json& j, const char* key) {
  const json& v = require_field(j, key);
  if (!v.is_string()) throw RecordError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

inline int require_int(const json& j, const char* key) {
  const json& v = require_field(j, key);
  if (!v.is_number_integer()) throw RecordError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

}  // namespace detail

// --- ObjectValue ----------------------------------------------------------
// {"entity": id} | {"quantity": {"amount": str, "unit": str|null}}
// | {"date": {"day": int, "month": int, "year": int}}

inline json object_to_json(const ObjectValue& o) {
  json j;
  if (const auto* e = std::get_if<EntityRef>(&o)) {
    j["entity"] = e->id;
  } else if (const auto* q = std::get_if<QuantityValue>(&o)) {
    json qj;
    qj["amount"] = q->amount;
    qj["unit"] = q->unit ? json(*q->unit) : json(nullptr);
    j["quantity"] = std::move(qj);
  } else {
    const auto& d = std::get<DateValue>(o);
    json dj;
    dj["day"] = d.day;
    dj["month"] = d.month;
    dj["year"] = d.year;
    j["date"] = std::move(dj);
  }
  return j;
}

inline ObjectValue object_from_json(const json& j) {
  if (!j.is_object()) throw RecordError("object value must be a JSON object");
  if (j.contains("entity")) {
    if (!j["entity"].is_string()) throw RecordError("object entity id must be a string");
    EntityRef ref{j["entity"].get<std::string>()};
    if (ref.id.empty()) throw RecordError("object entity id is empty");
    return ref;
  }
  if (j.contains("quantity")) {
    const json& qj = j["quantity"];
    if (!qj.is_object()) throw RecordError("quantity must be a JSON object");
    QuantityValue q;
    q.amount = detail::require_string(qj, "amount");
    if (!is_valid_amount(q.amount))
      throw RecordError("quantity amount '" + q.amount + "' is not a signed decimal number");
    if (qj.contains("unit") && !qj["unit"].is_null()) {
      if (!qj["unit"].is_string()) throw RecordError("quantity unit must be a string or null");
      q.unit = qj["unit"].get<std::string>();
    }
    return q;
  }
  if (j.contains("date")) {
    const json& dj = j["date"];
    if (!dj.is_object()) throw RecordError("date must be a JSON object");
    DateValue d;
    d.day = detail::require_int(dj, "day");
    d.month = detail::require_int(dj, "month");
    d.year = detail::require_int(dj, "year");
    if (auto err = check_date(d)) throw RecordError(*err);
    return d;
  }
  throw RecordError("object value needs one of 'entity', 'quantity', 'date'");
}

// --- EntityRecord ---------------------------------------------------------
// {"id": str, "name": str, "aliases": [str], "has_wiki_page": bool}

inline json entity_to_json(const EntityRecord& rec) {
  json j;
  j["id"] = rec.id;
  j["name"] = rec.canonical_name;
  j["aliases"] = rec.aliases;
  j["has_wiki_page"] = rec.has_wiki_page;
  return j;
}

inline EntityRecord entity_from_json(const json& j) {
  if (!j.is_object()) throw RecordError("entity record must be a JSON object");
  EntityRecord rec;
  rec.id = detail::require_string(j, "id");
  rec.canonical_name = detail::require_string(j, "name");
  if (j.contains("aliases")) {
    if (!j["aliases"].is_array()) throw RecordError("field 'aliases' must be an array");
    for (const auto& a : j["aliases"]) {
      if (!a.is_string()) throw RecordError("aliases must be strings");
      rec.aliases.push_back(a.get<std::string>());
    }
  }
  if (j.contains("has_wiki_page")) {
    if (!j["has_wiki_page"].is_boolean()) throw RecordError("field 'has_wiki_page' must be a boolean");
    rec.has_wiki_page = j["has_wiki_page"].get<bool>();
  }
  return rec;
}

// --- Triple ---------------------------------------------------------------
// {"subject": str, "relation": str, "object": <object>,
//  "subproperties": [{"name": str, "value": <object>}]}

inline json triple_to_json(const Triple& t) {
  json j;
  j["subject"] = t.subject;
  j["relation"] = t.relation;
  j["object"] = object_to_json(t.object);
  json subs = json::array();
  for (const auto& sp : t.subproperties) {
    json sj;
    sj["name"] = sp.name;
    sj["value"] = object_to_json(sp.value);
    subs.push_back(std::move(sj));
  }
  j["subproperties"] = std::move(subs);
  return j;
}

inline Triple triple_from_json(const json& j) {
  if (!j.is_object()) throw RecordError("triple record must be a JSON object");
  Triple t;
  t.subject = detail::require_string(j, "subject");
  if (t.subject.empty()) throw RecordError("triple subject is empty");
  t.relation = detail::require_string(j, "relation");
  if (t.relation.empty()) throw RecordError("triple relation is empty");
  t.object = object_from_json(detail::require_field(j, "object"));
  if (j.contains("subproperties")) {
    if (!j["subproperties"].is_array()) throw RecordError("field 'subproperties' must be an array");
    for (const auto& sj : j["subproperties"]) {
      Subproperty sp;
      sp.name = detail::require_string(sj, "name");
      if (sp.name.empty()) throw RecordError("subproperty name is empty");
      sp.value = object_from_json(detail::require_field(sj, "value"));
      t.subproperties.push_back(std::move(sp));
    }
  }
  return t;
}

// --- FlatTriple -----------------------------------------------------------
// Stored inside aligned/group records as {"relation": str, "object": <object>};
// the enclosing record carries the shared subject.

inline json flat_to_json(const FlatTriple& t) {
  json j;
  j["relation"] = t.relation_phrase;
  j["object"] = object_to_json(t.object);
  return j;
}

inline FlatTriple flat_from_json(const json& j, std::string subject) {
  FlatTriple t;
  t.subject = std::move(subject);
  t.relation_phrase = detail::require_string(j, "relation");
  if (t.relation_phrase.empty()) throw RecordError("flat triple relation is empty");
  t.object = object_from_json(detail::require_field(j, "object"));
  return t;
}

// --- PageText -------------------------------------------------------------
// {"subject": str, "root_section": str, "sentences": [str] (optional)}

inline json page_to_json(const PageText& p) {
  json j;
  j["subject"] = p.subject;
  j["root_section"] = p.root_section;
  j["sentences"] = p.sentences;
  return j;
}

// Returns the raw record; sentence segmentation is the loader's job.
// `had_sentences` reports whether the optional pre-split field was present.
inline PageText page_from_json(const json& j, bool* had_sentences = nullptr) {
  if (!j.is_object()) throw RecordError("page record must be a JSON object");
  PageText p;
  p.subject = detail::require_string(j, "subject");
  if (p.subject.empty()) throw RecordError("page subject is empty");
  p.root_section = detail::require_string(j, "root_section");
  if (had_sentences) *had_sentences = false;
  if (j.contains("sentences")) {
    if (!j["sentences"].is_array()) throw RecordError("field 'sentences' must be an array");
    for (const auto& s : j["sentences"]) {
      if (!s.is_string()) throw RecordError("sentences must be strings");
      p.sentences.push_back(s.get<std::string>());
    }
    if (had_sentences) *had_sentences = true;
  }
  return p;
}

}  // namespace kgverb

#endif  // KGVERB_RECORDS_HPP_
