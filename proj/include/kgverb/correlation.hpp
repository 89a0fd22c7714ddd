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
// Correlation measures for scorer evaluation. Pearson is the plain
// product-moment form, Spearman is Pearson over mean ranks, and Kendall
// is the tie-corrected tau-b computed with merge-sort inversion counting,
// so tie-heavy human ratings stay cheap at corpus size. A constant input
// makes each coefficient undefined; that is reported as an empty optional
// rather than a NaN.

#ifndef KGVERB_CORRELATION_HPP_
#define KGVERB_CORRELATION_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

namespace kgverb {

namespace detail {

inline void check_lengths(const std::vector<double>& xs, const std::vector<double>& ys) {
  if (xs.size() != ys.size())
    throw std::invalid_argument("correlation: input lengths differ");
  if (xs.size() < 2)
    throw std::invalid_argument("correlation: need at least two observations");
}

// Strict inversions (left > right) via bottom-up merge sort; ties do not
// count.
inline std::uint64_t count_inversions(std::vector<double> values) {
  std::vector<double> buffer(values.size());
  std::uint64_t inversions = 0;
  for (std::size_t width = 1; width < values.size(); width *= 2) {
    for (std::size_t lo = 0; lo + width < values.size(); lo += 2 * width) {
      std::size_t mid = lo + width;
      std::size_t hi = std::min(lo + 2 * width, values.size());
      std::size_t i = lo, j = mid, k = lo;
      while (i < mid && j < hi) {
        if (values[j] < values[i]) {
          inversions += mid - i;
          buffer[k++] = values[j++];
        } else {
          buffer[k++] = values[i++];
        }
      }
      while (i < mid) buffer[k++] = values[i++];
      while (j < hi) buffer[k++] = values[j++];
      std::copy(buffer.begin() + static_cast<std::ptrdiff_t>(lo),
                buffer.begin() + static_cast<std::ptrdiff_t>(hi),
                values.begin() + static_cast<std::ptrdiff_t>(lo));
    }
  }
  return inversions;
}

// Sum of t*(t-1)/2 over equal-value runs of the sorted input.
template <typename Iter, typename Equal>
std::uint64_t tied_pairs(Iter begin, Iter end, Equal equal) {
  std::uint64_t total = 0;
  for (Iter run = begin; run != end;) {
    Iter next = run;
    std::uint64_t len = 0;
    while (next != end && equal(*run, *next)) {
      ++next;
      ++len;
    }
    total += len * (len - 1) / 2;
    run = next;
  }
  return total;
}

}  // namespace detail

inline std::optional<double> pearson(const std::vector<double>& xs,
                                     const std::vector<double>& ys) {
  detail::check_lengths(xs, ys);
  double n = static_cast<double>(xs.size());
  double mean_x = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  double mean_y = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double dx = xs[i] - mean_x;
    double dy = ys[i] - mean_y;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

// 1-based ranks; tied values share the mean of the ranks they span.
inline std::vector<double> average_ranks(const std::vector<double>& values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && values[order[j]] == values[order[i]]) ++j;
    double mean_rank = (static_cast<double>(i) + static_cast<double>(j - 1)) / 2.0 + 1.0;
    for (std::size_t k = i; k < j; ++k) ranks[order[k]] = mean_rank;
    i = j;
  }
  return ranks;
}

inline std::optional<double> spearman(const std::vector<double>& xs,
                                      const std::vector<double>& ys) {
  detail::check_lengths(xs, ys);
  return pearson(average_ranks(xs), average_ranks(ys));
}

// Tau-b: sort by (x, y), count discordant pairs as inversions of the y
// sequence, correct for ties on either side.
inline std::optional<double> kendall_tau(const std::vector<double>& xs,
                                         const std::vector<double>& ys) {
  detail::check_lengths(xs, ys);
  std::size_t n = xs.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (xs[a] != xs[b]) return xs[a] < xs[b];
    return ys[a] < ys[b];
  });

  std::vector<std::pair<double, double>> sorted(n);
  for (std::size_t k = 0; k < n; ++k) sorted[k] = {xs[order[k]], ys[order[k]]};

  std::uint64_t n0 = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::uint64_t n1 = detail::tied_pairs(sorted.begin(), sorted.end(),
                                        [](const auto& a, const auto& b) {
                                          return a.first == b.first;
                                        });
  std::uint64_t n3 = detail::tied_pairs(sorted.begin(), sorted.end(),
                                        [](const auto& a, const auto& b) {
                                          return a.first == b.first && a.second == b.second;
                                        });
  std::vector<double> y_sorted(ys);
  std::sort(y_sorted.begin(), y_sorted.end());
  std::uint64_t n2 = detail::tied_pairs(y_sorted.begin(), y_sorted.end(),
                                        [](double a, double b) { return a == b; });

  std::vector<double> y_by_x(n);
  for (std::size_t k = 0; k < n; ++k) y_by_x[k] = sorted[k].second;
  std::uint64_t discordant = detail::count_inversions(std::move(y_by_x));

  if (n0 == n1 || n0 == n2) return std::nullopt;  // constant side
  double concordant = static_cast<double>(n0 - n1 - n2 + n3) - static_cast<double>(discordant);
  double numerator = concordant - static_cast<double>(discordant);
  // One sqrt over the product, not a product of sqrts: the latter rounds
  // twice and can push a perfect correlation just past 1.
  double denominator =
      std::sqrt(static_cast<double>(n0 - n1) * static_cast<double>(n0 - n2));
  return std::clamp(numerator / denominator, -1.0, 1.0);
}

struct CorrelationReport {
  std::optional<double> pearson;
  std::optional<double> spearman;
  std::optional<double> kendall;
  std::size_t n = 0;
};

inline CorrelationReport eval_scorer(const std::vector<double>& predicted,
                                     const std::vector<double>& human) {
  CorrelationReport report;
  report.pearson = pearson(predicted, human);
  report.spearman = spearman(predicted, human);
  report.kendall = kendall_tau(predicted, human);
  report.n = predicted.size();
  return report;
}

}  // namespace kgverb

#endif  // KGVERB_CORRELATION_HPP_
