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
// Semantic quality scoring and bottom-percentile filtering. The built-in
// score is the fraction of a group's triples whose object can be found in
// the generated text by the alignment matchers; any external scorer can
// substitute its own scores through the same [0,1] contract.

#ifndef KGVERB_FILTER_HPP_
#define KGVERB_FILTER_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kgverb/core.hpp"
#include "kgverb/grouper.hpp"
#include "kgverb/matchers.hpp"

namespace kgverb {

struct ScoredSentence {
  std::string id;       // external scorer key, e.g. the generator line number
  std::string subject;
  std::string text;
  double score = 0.0;   // in [0, 1]

  bool operator==(const ScoredSentence&) const = default;
};

// Fraction of the group's triples covered by the text, where coverage is
// the same object-matching used for alignment. Adding a mention can only
// cover more triples, so the score is monotone in the text.
inline double heuristic_score(const std::string& text, const TripleGroup& group,
                              const EntityCatalog& catalog) {
  if (group.triples.empty())
    throw std::invalid_argument("heuristic_score: empty group for subject '" +
                                group.subject + "'");
  std::size_t covered = 0;
  for (const auto& t : group.triples)
    if (match_triple(text, t, catalog)) ++covered;
  return static_cast<double>(covered) / static_cast<double>(group.triples.size());
}

struct FilterResult {
  std::vector<ScoredSentence> kept;
  std::vector<ScoredSentence> removed;
};

// Removes exactly floor(fraction * N) items with the lowest scores. Ties
// at the boundary resolve by input order (earlier items removed first);
// both output lists keep input order.
inline FilterResult percentile_filter(const std::vector<ScoredSentence>& items,
                                      double fraction = 0.01) {
  if (!(fraction >= 0.0 && fraction < 1.0))
    throw std::invalid_argument("percentile_filter: fraction must be in [0, 1)");
  std::size_t n = items.size();
  auto k = static_cast<std::size_t>(
      std::floor(fraction * static_cast<double>(n)));
  if (k > n) k = n;

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return items[a].score < items[b].score;
  });

  std::vector<bool> removed_flag(n, false);
  for (std::size_t i = 0; i < k; ++i) removed_flag[order[i]] = true;

  FilterResult result;
  result.kept.reserve(n - k);
  result.removed.reserve(k);
  for (std::size_t i = 0; i < n; ++i) {
    if (removed_flag[i])
      result.removed.push_back(items[i]);
    else
      result.kept.push_back(items[i]);
  }
  return result;
}

}  // namespace kgverb

#endif  // KGVERB_FILTER_HPP_
