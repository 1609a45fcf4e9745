#pragma once

#include <cstdint>
#include <vector>

#include "warp_lis/seaweed.hpp"

namespace warp_lis {

/// Dominance counting over the points (k, Pi[k]) of a seaweed permutation.
///
/// Stored as a wavelet matrix: one rank-indexed bitvector per value bit, so a
/// query costs O(log size) and the whole structure about size * log(size) bits.
class RangeCountIndex {
 public:
  RangeCountIndex() = default;
  explicit RangeCountIndex(const SeaweedPermutation& sw);

  int size() const noexcept { return size_; }

  /// #{ k : k_lo < k <= size, Pi[k] <= k_hi }. Throws Errc::out_of_range unless
  /// both arguments lie in [0, size].
  int count(int k_lo, int k_hi) const;

  int operator()(int k_lo, int k_hi) const { return count(k_lo, k_hi); }

 private:
  struct Level {
    std::vector<std::uint64_t> words;
    std::vector<std::uint32_t> ranks;  // ones before each word
    int zeros = 0;

    int rank1(int end) const;
  };

  // Number of k < end (0-based) whose stored value is below `bound`.
  int count_less(int end, int bound) const;

  int size_ = 0;
  int bits_ = 0;
  std::vector<Level> levels_;
};

inline RangeCountIndex build_range_index(const SeaweedPermutation& sw) { return RangeCountIndex(sw); }

inline int dominance_count(const RangeCountIndex& index, int k_lo, int k_hi) {
  return index.count(k_lo, k_hi);
}

}  // namespace warp_lis
