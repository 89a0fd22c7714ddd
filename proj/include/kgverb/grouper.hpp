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
// Relation co-occurrence counting and greedy chain aggregation. Two
// relations co-occur when one training example carries triples of both; a
// relation co-occurs with itself when one example carries it twice. At
// grouping time the seed is the triple whose relation has the largest
// total co-occurrence mass against the rest of the pool, and chains grow
// from the previous pick while the pair count clears the cutoff, capped
// at max_depth. Ties fall to the lexicographically smaller relation, then
// to input order, so output is reproducible.

#ifndef KGVERB_GROUPER_HPP_
#define KGVERB_GROUPER_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kgverb/aligner.hpp"
#include "kgverb/core.hpp"

namespace kgverb {

class CooccurrenceStats {
 public:
  using Key = std::pair<std::string, std::string>;  // first <= second

  void add(const std::string& a, const std::string& b, std::uint64_t n = 1) {
    counts_[make_key(a, b)] += n;
  }

  std::uint64_t count(const std::string& a, const std::string& b) const {
    auto it = counts_.find(make_key(a, b));
    return it == counts_.end() ? 0 : it->second;
  }

  // Sorted (a <= b) pair counts, the persisted representation.
  const std::map<Key, std::uint64_t>& pairs() const { return counts_; }

  bool operator==(const CooccurrenceStats&) const = default;

 private:
  static Key make_key(const std::string& a, const std::string& b) {
    return a <= b ? Key{a, b} : Key{b, a};
  }

  std::map<Key, std::uint64_t> counts_;
};

// One pass over the examples. Each example bumps every unordered pair of
// distinct relations it contains by one, and the self-pair of any
// relation it contains at least twice.
inline CooccurrenceStats count_cooccurrence(const std::vector<AlignmentExample>& examples) {
  CooccurrenceStats stats;
  std::map<std::string, std::size_t> multiplicity;
  for (const auto& ex : examples) {
    multiplicity.clear();
    for (const auto& t : ex.triples) ++multiplicity[t.relation_phrase];
    for (auto a = multiplicity.begin(); a != multiplicity.end(); ++a) {
      if (a->second >= 2) stats.add(a->first, a->first);
      auto b = a;
      for (++b; b != multiplicity.end(); ++b) stats.add(a->first, b->first);
    }
  }
  return stats;
}

struct GroupingConfig {
  std::size_t max_depth = 5;
  std::uint64_t cutoff = 5;
};

struct TripleGroup {
  std::string subject;
  std::vector<FlatTriple> triples;  // chain order, 1..max_depth entries

  bool operator==(const TripleGroup&) const = default;
};

// Greedy chains over one subject's triples. The output is a partition of
// the input; triples that never chain come out as singletons.
inline std::vector<TripleGroup> group_triples(const std::vector<FlatTriple>& subject_triples,
                                              const CooccurrenceStats& stats,
                                              const GroupingConfig& cfg = {}) {
  std::vector<TripleGroup> groups;
  if (subject_triples.empty()) return groups;
  const std::string& subject = subject_triples.front().subject;
  for (const auto& t : subject_triples)
    if (t.subject != subject)
      throw std::invalid_argument("group_triples: mixed subjects '" + subject + "' and '" +
                                  t.subject + "'");

  std::vector<std::size_t> pool(subject_triples.size());
  for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = i;

  auto relation = [&](std::size_t idx) -> const std::string& {
    return subject_triples[idx].relation_phrase;
  };
  auto take = [&](std::size_t pool_pos) {
    std::size_t idx = pool[pool_pos];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pool_pos));
    return idx;
  };

  while (!pool.empty()) {
    // Seed: maximal co-occurrence mass against the rest of the pool.
    std::size_t best_pos = 0;
    std::uint64_t best_mass = 0;
    bool have_best = false;
    for (std::size_t p = 0; p < pool.size(); ++p) {
      std::uint64_t mass = 0;
      for (std::size_t q = 0; q < pool.size(); ++q)
        if (q != p) mass += stats.count(relation(pool[p]), relation(pool[q]));
      if (!have_best || mass > best_mass ||
          (mass == best_mass && relation(pool[p]) < relation(pool[best_pos]))) {
        best_pos = p;
        best_mass = mass;
        have_best = true;
      }
    }

    TripleGroup group;
    group.subject = subject;
    group.triples.push_back(subject_triples[take(best_pos)]);

    while (group.triples.size() < cfg.max_depth && !pool.empty()) {
      const std::string& prev = group.triples.back().relation_phrase;
      std::size_t cand_pos = 0;
      std::uint64_t cand_count = 0;
      bool have_cand = false;
      for (std::size_t p = 0; p < pool.size(); ++p) {
        std::uint64_t c = stats.count(prev, relation(pool[p]));
        if (c < cfg.cutoff) continue;
        if (!have_cand || c > cand_count ||
            (c == cand_count && relation(pool[p]) < relation(pool[cand_pos]))) {
          cand_pos = p;
          cand_count = c;
          have_cand = true;
        }
      }
      if (!have_cand) break;
      group.triples.push_back(subject_triples[take(cand_pos)]);
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

// Partitions by subject, groups each subject independently, and emits
// subjects in ascending id order.
inline std::vector<TripleGroup> group_corpus(const std::vector<FlatTriple>& all_triples,
                                             const CooccurrenceStats& stats,
                                             const GroupingConfig& cfg = {}) {
  std::map<std::string, std::vector<FlatTriple>> by_subject;
  for (const auto& t : all_triples) by_subject[t.subject].push_back(t);
  std::vector<TripleGroup> groups;
  for (const auto& [subject, triples] : by_subject) {
    auto subject_groups = group_triples(triples, stats, cfg);
    for (auto& g : subject_groups) groups.push_back(std::move(g));
  }
  return groups;
}

}  // namespace kgverb

#endif  // KGVERB_GROUPER_HPP_
