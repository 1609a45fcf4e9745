#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

namespace warp_lis {

/// Length of the longest strictly increasing subsequence (patience sorting).
std::size_t lis_length(std::span<const int> seq);

/// LIS length of seq[pos_first : pos_last] (1-based, inclusive, empty when
/// pos_first > pos_last) using only values in [band_lo, band_hi].
std::size_t banded_lis_length(std::span<const int> seq, std::int64_t pos_first,
                              std::int64_t pos_last, std::int64_t band_lo, std::int64_t band_hi);

/// Heaviest increasing subsequence weight over a position range and value
/// band, for nonnegative weights of any arithmetic type.
template <class Weight>
Weight banded_his_weight(std::span<const int> values, std::span<const Weight> weights,
                         std::int64_t pos_first, std::int64_t pos_last, std::int64_t band_lo,
                         std::int64_t band_hi) {
  const std::int64_t size = static_cast<std::int64_t>(values.size());
  pos_first = std::max<std::int64_t>(pos_first, 1);
  pos_last = std::min(pos_last, size);
  if (pos_first > pos_last || band_lo > band_hi) return Weight{};

  std::vector<std::size_t> kept;
  for (std::int64_t p = pos_first; p <= pos_last; ++p) {
    const int v = values[static_cast<std::size_t>(p - 1)];
    if (v >= band_lo && v <= band_hi) kept.push_back(static_cast<std::size_t>(p - 1));
  }
  if (kept.empty()) return Weight{};

  std::vector<int> ranks(kept.size());
  for (std::size_t t = 0; t < kept.size(); ++t) ranks[t] = values[kept[t]];
  std::sort(ranks.begin(), ranks.end());
  ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());

  // Fenwick tree of prefix maxima over value ranks.
  std::vector<Weight> tree(ranks.size() + 1, Weight{});
  Weight best{};
  for (const std::size_t idx : kept) {
    const auto rank = static_cast<std::size_t>(
        std::lower_bound(ranks.begin(), ranks.end(), values[idx]) - ranks.begin());
    Weight prefix{};
    for (std::size_t x = rank; x > 0; x -= x & (~x + 1)) prefix = std::max(prefix, tree[x]);
    const Weight here = prefix + weights[idx];
    best = std::max(best, here);
    for (std::size_t x = rank + 1; x < tree.size(); x += x & (~x + 1)) {
      tree[x] = std::max(tree[x], here);
    }
  }
  return best;
}

}  // namespace warp_lis
