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
// Corpus-level report rendering: the five alignment counters and the
// chain-length histogram with the triples-per-group ratio, as plain text
// or JSON.

#ifndef KGVERB_REPORT_HPP_
#define KGVERB_REPORT_HPP_

#include <cstdint>
#include <iomanip>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kgverb/aligner.hpp"
#include "kgverb/grouper.hpp"
#include "kgverb/records.hpp"

namespace kgverb {

inline std::string format_thousands(std::uint64_t n) {
  std::string digits = std::to_string(n);
  std::string out;
  out.reserve(digits.size() + digits.size() / 3);
  std::size_t lead = digits.size() % 3;
  if (lead == 0) lead = 3;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i >= lead && (i - lead) % 3 == 0) out += ',';
    out += digits[i];
  }
  return out;
}

namespace detail {

inline void stat_row(std::ostream& out, const std::string& label, std::uint64_t value) {
  out << std::left << std::setw(20) << label << std::right << std::setw(15)
      << format_thousands(value) << '\n';
}

}  // namespace detail

inline std::string report_alignment_text(const AlignmentStats& stats) {
  std::ostringstream out;
  detail::stat_row(out, "Total triples", stats.total_triples);
  detail::stat_row(out, "Triples aligned", stats.triples_aligned);
  detail::stat_row(out, "Sentences selected", stats.sentences_selected);
  detail::stat_row(out, "Total relations", stats.total_relations);
  detail::stat_row(out, "Relations aligned", stats.relations_aligned);
  return out.str();
}

inline json alignment_stats_to_json(const AlignmentStats& stats) {
  json j;
  j["total_triples"] = stats.total_triples;
  j["triples_aligned"] = stats.triples_aligned;
  j["sentences_selected"] = stats.sentences_selected;
  j["total_relations"] = stats.total_relations;
  j["relations_aligned"] = stats.relations_aligned;
  return j;
}

inline AlignmentStats alignment_stats_from_json(const json& j) {
  AlignmentStats stats;
  stats.total_triples = j.at("total_triples").get<std::uint64_t>();
  stats.triples_aligned = j.at("triples_aligned").get<std::uint64_t>();
  stats.sentences_selected = j.at("sentences_selected").get<std::uint64_t>();
  stats.total_relations = j.at("total_relations").get<std::uint64_t>();
  stats.relations_aligned = j.at("relations_aligned").get<std::uint64_t>();
  return stats;
}

struct GroupingReport {
  std::map<std::size_t, std::uint64_t> histogram;  // chain length -> count
  std::uint64_t groups = 0;
  std::uint64_t triples = 0;
  double triples_per_group = 0.0;
};

inline GroupingReport report_grouping(const std::vector<TripleGroup>& groups) {
  GroupingReport report;
  for (const auto& g : groups) {
    ++report.histogram[g.triples.size()];
    ++report.groups;
    report.triples += g.triples.size();
  }
  if (report.groups > 0)
    report.triples_per_group =
        static_cast<double>(report.triples) / static_cast<double>(report.groups);
  return report;
}

inline std::string report_grouping_text(const GroupingReport& report) {
  std::ostringstream out;
  detail::stat_row(out, "Groups", report.groups);
  detail::stat_row(out, "Triples", report.triples);
  out << std::left << std::setw(20) << "Triples per group" << std::right
      << std::setw(15) << std::fixed << std::setprecision(2)
      << report.triples_per_group << '\n';
  for (const auto& [length, count] : report.histogram)
    detail::stat_row(out, "Chains of length " + std::to_string(length), count);
  return out.str();
}

inline json grouping_report_to_json(const GroupingReport& report) {
  json j;
  j["groups"] = report.groups;
  j["triples"] = report.triples;
  j["triples_per_group"] = report.triples_per_group;
  json hist = json::object();
  for (const auto& [length, count] : report.histogram)
    hist[std::to_string(length)] = count;
  j["histogram"] = std::move(hist);
  return j;
}

}  // namespace kgverb

#endif  // KGVERB_REPORT_HPP_
