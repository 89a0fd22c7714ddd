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
// Multi-pattern alias matcher: an Aho-Corasick automaton over case-folded
// alias strings with word-boundary checks applied per occurrence. One scan
// over a sentence reports every alias it contains regardless of how many
// patterns were compiled, which is what makes corpus-scale alignment
// tractable. The automaton is immutable after build and safe to share
// across threads.

#ifndef KGVERB_ALIAS_INDEX_HPP_
#define KGVERB_ALIAS_INDEX_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kgverb/text.hpp"

namespace kgverb {

class AliasIndex {
 public:
  struct Match {
    std::uint32_t payload;
    std::size_t begin;  // byte offset of first pattern byte
    std::size_t end;    // one past the last pattern byte
  };

  class Builder;

  AliasIndex() { nodes_.emplace_back(); }

  std::size_t pattern_count() const { return lengths_.size(); }
  bool empty() const { return lengths_.empty(); }

  // Calls on_match for every word-bounded, case-insensitive occurrence of
  // any pattern. A pattern registered under several payloads fires once
  // per payload at each occurrence.
  template <typename Fn>
  void scan(std::string_view text, Fn&& on_match) const {
    std::int32_t state = 0;
    for (std::size_t i = 0; i < text.size(); ++i) {
      unsigned char c = static_cast<unsigned char>(ascii_lower(text[i]));
      state = step(state, c);
      std::int32_t t = nodes_[state].pattern >= 0 ? state : nodes_[state].out;
      while (t >= 0) {
        std::int32_t p = nodes_[t].pattern;
        std::size_t len = lengths_[static_cast<std::size_t>(p)];
        std::size_t begin = i + 1 - len;
        if (boundary_before(text, begin) && boundary_after(text, i + 1)) {
          for (std::uint32_t payload : payloads_[static_cast<std::size_t>(p)])
            on_match(Match{payload, begin, i + 1});
        }
        t = nodes_[t].out;
      }
    }
  }

  // Sorted, deduplicated payloads of all matches in text.
  std::vector<std::uint32_t> collect(std::string_view text) const {
    std::vector<std::uint32_t> hits;
    scan(text, [&](const Match& m) { hits.push_back(m.payload); });
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
    return hits;
  }

 private:
  struct Node {
    std::unordered_map<unsigned char, std::int32_t> next;
    std::int32_t fail = 0;
    std::int32_t out = -1;     // nearest terminal suffix node
    std::int32_t pattern = -1; // unique case-folded pattern ending here
  };

  std::int32_t step(std::int32_t state, unsigned char c) const {
    for (;;) {
      const auto& next = nodes_[static_cast<std::size_t>(state)].next;
      auto it = next.find(c);
      if (it != next.end()) return it->second;
      if (state == 0) return 0;
      state = nodes_[static_cast<std::size_t>(state)].fail;
    }
  }

  std::vector<Node> nodes_;
  std::vector<std::size_t> lengths_;                 // per pattern id
  std::vector<std::vector<std::uint32_t>> payloads_; // per pattern id

  friend class Builder;
};

class AliasIndex::Builder {
 public:
  // Registers a pattern under a payload. Patterns are case-folded; the
  // same folded string added twice shares one automaton path and
  // accumulates payloads. Empty patterns are ignored.
  void add(std::string_view pattern, std::uint32_t payload) {
    if (pattern.empty()) return;
    std::string folded = lower_copy(pattern);
    auto [it, inserted] = ids_.emplace(std::move(folded), patterns_.size());
    if (inserted) patterns_.push_back({it->first, {}});
    patterns_[it->second].second.push_back(payload);
  }

  AliasIndex build() {
    AliasIndex index;
    index.lengths_.reserve(patterns_.size());
    index.payloads_.reserve(patterns_.size());
    for (std::size_t pid = 0; pid < patterns_.size(); ++pid) {
      const std::string& pat = patterns_[pid].first;
      std::int32_t state = 0;
      for (char ch : pat) {
        unsigned char c = static_cast<unsigned char>(ch);
        auto& next = index.nodes_[static_cast<std::size_t>(state)].next;
        auto it = next.find(c);
        if (it == next.end()) {
          std::int32_t fresh = static_cast<std::int32_t>(index.nodes_.size());
          next.emplace(c, fresh);
          index.nodes_.emplace_back();
          state = fresh;
        } else {
          state = it->second;
        }
      }
      index.nodes_[static_cast<std::size_t>(state)].pattern =
          static_cast<std::int32_t>(pid);
      index.lengths_.push_back(pat.size());
      auto& payloads = patterns_[pid].second;
      std::sort(payloads.begin(), payloads.end());
      payloads.erase(std::unique(payloads.begin(), payloads.end()),
                     payloads.end());
      index.payloads_.push_back(std::move(payloads));
    }
    link(index);
    return index;
  }

 private:
  // Breadth-first fail and output links, the standard construction.
  static void link(AliasIndex& index) {
    std::deque<std::int32_t> queue;
    for (auto& [c, child] : index.nodes_[0].next) {
      index.nodes_[static_cast<std::size_t>(child)].fail = 0;
      queue.push_back(child);
    }
    while (!queue.empty()) {
      std::int32_t u = queue.front();
      queue.pop_front();
      Node& node = index.nodes_[static_cast<std::size_t>(u)];
      const Node& via = index.nodes_[static_cast<std::size_t>(node.fail)];
      node.out = via.pattern >= 0 ? node.fail : via.out;
      for (auto& [c, child] : node.next) {
        index.nodes_[static_cast<std::size_t>(child)].fail =
            index.step(node.fail, c);
        queue.push_back(child);
      }
    }
  }

  // Folded pattern -> pattern id; string storage lives in patterns_.
  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<std::pair<std::string, std::vector<std::uint32_t>>> patterns_;
};

}  // namespace kgverb

#endif  // KGVERB_ALIAS_INDEX_HPP_
