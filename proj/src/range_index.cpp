#include "warp_lis/range_index.hpp"

#include <bit>
#include <string>

namespace warp_lis {

int RangeCountIndex::Level::rank1(int end) const {
  const auto word = static_cast<std::size_t>(end >> 6);
  const int rest = end & 63;
  int r = static_cast<int>(ranks[word]);
  if (rest != 0) r += std::popcount(words[word] & ((std::uint64_t{1} << rest) - 1));
  return r;
}

RangeCountIndex::RangeCountIndex(const SeaweedPermutation& sw) : size_(sw.size()) {
  const auto n = static_cast<std::size_t>(size_);
  bits_ = size_ <= 1 ? 1 : std::bit_width(static_cast<unsigned>(size_ - 1));
  std::vector<int> cur(n);
  for (std::size_t k = 0; k < n; ++k) cur[k] = sw.pi[k] - 1;
  std::vector<int> next(n);
  levels_.resize(static_cast<std::size_t>(bits_));
  for (int level = 0; level < bits_; ++level) {
    const int shift = bits_ - 1 - level;
    Level& lv = levels_[static_cast<std::size_t>(level)];
    lv.words.assign(n / 64 + 1, 0);
    lv.ranks.assign(n / 64 + 1, 0);
    for (std::size_t k = 0; k < n; ++k) {
      if ((cur[k] >> shift) & 1) lv.words[k >> 6] |= std::uint64_t{1} << (k & 63);
    }
    std::uint32_t ones = 0;
    for (std::size_t w = 0; w < lv.words.size(); ++w) {
      lv.ranks[w] = ones;
      ones += static_cast<std::uint32_t>(std::popcount(lv.words[w]));
    }
    lv.zeros = size_ - static_cast<int>(ones);
    std::size_t z = 0;
    std::size_t o = static_cast<std::size_t>(lv.zeros);
    for (std::size_t k = 0; k < n; ++k) {
      if ((cur[k] >> shift) & 1) {
        next[o++] = cur[k];
      } else {
        next[z++] = cur[k];
      }
    }
    cur.swap(next);
  }
}

int RangeCountIndex::count_less(int end, int bound) const {
  if (bound <= 0 || end <= 0) return 0;
  if (bound >= (1 << bits_)) return end;
  int begin = 0;
  int result = 0;
  for (int level = 0; level < bits_; ++level) {
    const Level& lv = levels_[static_cast<std::size_t>(level)];
    const int b1 = lv.rank1(begin);
    const int e1 = lv.rank1(end);
    if ((bound >> (bits_ - 1 - level)) & 1) {
      result += (end - e1) - (begin - b1);
      begin = lv.zeros + b1;
      end = lv.zeros + e1;
    } else {
      begin -= b1;
      end -= e1;
    }
  }
  return result;
}

int RangeCountIndex::count(int k_lo, int k_hi) const {
  if (k_lo < 0 || k_hi < 0 || k_lo > size_ || k_hi > size_) {
    throw Error(Errc::out_of_range, "dominance query (" + std::to_string(k_lo) + ", " +
                                        std::to_string(k_hi) + ") outside [0, " +
                                        std::to_string(size_) + "]");
  }
  // Values are a permutation of 1..size, so exactly k_hi of them are <= k_hi.
  return k_hi - count_less(k_lo, k_hi);
}

}  // namespace warp_lis
