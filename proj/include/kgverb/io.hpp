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
// Readers and writers for every file the pipeline exchanges: the aligned
// corpus, co-occurrence table, groups, training pairs, generator inputs
// and outputs, score tables, filter partitions and retrieval documents.
// All stages communicate only through these files.

#ifndef KGVERB_IO_HPP_
#define KGVERB_IO_HPP_

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kgverb/aligner.hpp"
#include "kgverb/filter.hpp"
#include "kgverb/grouper.hpp"
#include "kgverb/ingest.hpp"
#include "kgverb/records.hpp"
#include "kgverb/report.hpp"
#include "kgverb/serializer.hpp"
#include "kgverb/text.hpp"

namespace kgverb {

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file '" + path + "'");
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  return out;
}

// TSV fields may not carry tabs or line breaks; they become single spaces.
inline std::string tsv_field(std::string_view text) {
  std::string out(text);
  for (char& c : out)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return out;
}

// --- aligned.jsonl ---------------------------------------------------------

inline json example_to_json(const AlignmentExample& ex) {
  json j;
  j["subject"] = ex.subject;
  j["sentence"] = ex.sentence;
  j["original_sentence"] = ex.original_sentence;
  j["pronoun_replaced"] = ex.pronoun_replaced;
  json triples = json::array();
  for (const auto& t : ex.triples) triples.push_back(flat_to_json(t));
  j["triples"] = std::move(triples);
  j["page"] = ex.page;
  j["sentence_index"] = ex.sentence_index;
  return j;
}

inline AlignmentExample example_from_json(const json& j) {
  AlignmentExample ex;
  ex.subject = detail::require_string(j, "subject");
  ex.sentence = detail::require_string(j, "sentence");
  ex.original_sentence = detail::require_string(j, "original_sentence");
  const json& replaced = detail::require_field(j, "pronoun_replaced");
  if (!replaced.is_boolean()) throw RecordError("field 'pronoun_replaced' must be a boolean");
  ex.pronoun_replaced = replaced.get<bool>();
  const json& triples = detail::require_field(j, "triples");
  if (!triples.is_array() || triples.empty())
    throw RecordError("field 'triples' must be a non-empty array");
  for (const auto& tj : triples) ex.triples.push_back(flat_from_json(tj, ex.subject));
  ex.page = detail::require_string(j, "page");
  int index = detail::require_int(j, "sentence_index");
  if (index < 0) throw RecordError("field 'sentence_index' must be non-negative");
  ex.sentence_index = static_cast<std::size_t>(index);
  return ex;
}

inline void write_aligned(std::ostream& out, const std::vector<AlignmentExample>& examples) {
  for (const auto& ex : examples) out << example_to_json(ex).dump() << '\n';
}

struct AlignedReadResult {
  std::vector<AlignmentExample> examples;
  std::vector<Diagnostic> diagnostics;
};

inline AlignedReadResult read_aligned(std::istream& in) {
  AlignedReadResult result;
  detail::for_each_record(in, result.diagnostics, [&](const json& j, std::size_t) {
    result.examples.push_back(example_from_json(j));
  });
  return result;
}

// --- cooc.tsv --------------------------------------------------------------

inline void write_cooc(std::ostream& out, const CooccurrenceStats& stats) {
  for (const auto& [key, count] : stats.pairs())
    out << tsv_field(key.first) << '\t' << tsv_field(key.second) << '\t' << count << '\n';
}

struct CoocReadResult {
  CooccurrenceStats stats;
  std::vector<Diagnostic> diagnostics;
};

inline CoocReadResult read_cooc(std::istream& in) {
  CoocReadResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      result.diagnostics.push_back({line_no, "expected 'relation<TAB>relation<TAB>count'"});
      continue;
    }
    std::string a = line.substr(0, tab1);
    std::string b = line.substr(tab1 + 1, tab2 - tab1 - 1);
    std::string count_text = line.substr(tab2 + 1);
    char* endp = nullptr;
    unsigned long long count = std::strtoull(count_text.c_str(), &endp, 10);
    if (endp == count_text.c_str() || *endp != '\0') {
      result.diagnostics.push_back({line_no, "invalid count '" + count_text + "'"});
      continue;
    }
    result.stats.add(a, b, count);
  }
  return result;
}

// --- groups.jsonl ----------------------------------------------------------

inline json group_to_json(const TripleGroup& g) {
  json j;
  j["subject"] = g.subject;
  json triples = json::array();
  for (const auto& t : g.triples) triples.push_back(flat_to_json(t));
  j["triples"] = std::move(triples);
  return j;
}

inline TripleGroup group_from_json(const json& j) {
  TripleGroup g;
  g.subject = detail::require_string(j, "subject");
  const json& triples = detail::require_field(j, "triples");
  if (!triples.is_array() || triples.empty())
    throw RecordError("field 'triples' must be a non-empty array");
  for (const auto& tj : triples) g.triples.push_back(flat_from_json(tj, g.subject));
  return g;
}

inline void write_groups(std::ostream& out, const std::vector<TripleGroup>& groups) {
  for (const auto& g : groups) out << group_to_json(g).dump() << '\n';
}

struct GroupsReadResult {
  std::vector<TripleGroup> groups;
  std::vector<Diagnostic> diagnostics;
};

inline GroupsReadResult read_groups(std::istream& in) {
  GroupsReadResult result;
  detail::for_each_record(in, result.diagnostics, [&](const json& j, std::size_t) {
    result.groups.push_back(group_from_json(j));
  });
  return result;
}

// --- train.tsv / inputs.txt / generated.tsv --------------------------------

inline void write_train_tsv(std::ostream& out,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
  for (const auto& [input, target] : pairs)
    out << tsv_field(input) << '\t' << tsv_field(target) << '\n';
}

inline void write_inputs(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& line : lines) out << tsv_field(line) << '\n';
}

struct GeneratedReadResult {
  // (1-based input line number, generated text)
  std::vector<std::pair<std::size_t, std::string>> sentences;
  std::vector<Diagnostic> diagnostics;
};

inline GeneratedReadResult read_generated(std::istream& in) {
  GeneratedReadResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      result.diagnostics.push_back({line_no, "expected 'line_number<TAB>sentence'"});
      continue;
    }
    std::string number_text = line.substr(0, tab);
    char* endp = nullptr;
    unsigned long long number = std::strtoull(number_text.c_str(), &endp, 10);
    if (endp == number_text.c_str() || *endp != '\0' || number == 0) {
      result.diagnostics.push_back({line_no, "invalid line number '" + number_text + "'"});
      continue;
    }
    result.sentences.emplace_back(static_cast<std::size_t>(number), line.substr(tab + 1));
  }
  return result;
}

// --- scores.tsv ------------------------------------------------------------

inline std::string format_score(double score) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << score;
  return out.str();
}

inline void write_scores(std::ostream& out, const std::vector<ScoredSentence>& items) {
  for (const auto& s : items) out << tsv_field(s.id) << '\t' << format_score(s.score) << '\n';
}

struct ScoresReadResult {
  std::vector<std::pair<std::string, double>> scores;  // (id, score), file order
  std::vector<Diagnostic> diagnostics;
};

inline ScoresReadResult read_scores(std::istream& in) {
  ScoresReadResult result;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      result.diagnostics.push_back({line_no, "expected 'id<TAB>score'"});
      continue;
    }
    std::string score_text = line.substr(tab + 1);
    char* endp = nullptr;
    double score = std::strtod(score_text.c_str(), &endp);
    if (endp == score_text.c_str() || *endp != '\0') {
      result.diagnostics.push_back({line_no, "invalid score '" + score_text + "'"});
      continue;
    }
    if (!(score >= 0.0 && score <= 1.0)) {
      result.diagnostics.push_back({line_no, "score out of range [0, 1]: '" + score_text + "'"});
      continue;
    }
    result.scores.emplace_back(line.substr(0, tab), score);
  }
  return result;
}

// --- kept.jsonl / removed.jsonl --------------------------------------------

inline json scored_to_json(const ScoredSentence& s) {
  json j;
  j["id"] = s.id;
  j["score"] = s.score;
  j["text"] = s.text;
  j["subject"] = s.subject;
  return j;
}

inline ScoredSentence scored_from_json(const json& j) {
  ScoredSentence s;
  s.id = detail::require_string(j, "id");
  const json& score = detail::require_field(j, "score");
  if (!score.is_number()) throw RecordError("field 'score' must be a number");
  s.score = score.get<double>();
  if (!(s.score >= 0.0 && s.score <= 1.0))
    throw RecordError("field 'score' must be in [0, 1]");
  s.text = detail::require_string(j, "text");
  s.subject = detail::require_string(j, "subject");
  return s;
}

inline void write_scored(std::ostream& out, const std::vector<ScoredSentence>& items) {
  for (const auto& s : items) out << scored_to_json(s).dump() << '\n';
}

struct ScoredReadResult {
  std::vector<ScoredSentence> items;
  std::vector<Diagnostic> diagnostics;
};

inline ScoredReadResult read_scored(std::istream& in) {
  ScoredReadResult result;
  detail::for_each_record(in, result.diagnostics, [&](const json& j, std::size_t) {
    result.items.push_back(scored_from_json(j));
  });
  return result;
}

// --- documents.jsonl -------------------------------------------------------

inline json document_to_json(const CorpusDocument& doc) {
  json j;
  j["subject"] = doc.subject;
  j["text"] = doc.text;
  j["n_sentences"] = doc.sentences.size();
  return j;
}

inline void write_documents(std::ostream& out, const std::vector<CorpusDocument>& docs) {
  for (const auto& d : docs) out << document_to_json(d).dump() << '\n';
}

// --- diagnostics -----------------------------------------------------------

inline void write_diagnostics(std::ostream& err, const std::string& path,
                              const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags) {
    err << path << ':';
    if (d.line > 0) err << d.line << ':';
    err << ' ' << d.message << '\n';
  }
}

}  // namespace kgverb

#endif  // KGVERB_IO_HPP_
