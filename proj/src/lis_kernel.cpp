#include "warp_lis/lis_kernel.hpp"

namespace warp_lis {

std::size_t lis_length(std::span<const int> seq) {
  std::vector<int> tails;
  for (const int v : seq) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return tails.size();
}

std::size_t banded_lis_length(std::span<const int> seq, std::int64_t pos_first,
                              std::int64_t pos_last, std::int64_t band_lo, std::int64_t band_hi) {
  const std::int64_t size = static_cast<std::int64_t>(seq.size());
  pos_first = std::max<std::int64_t>(pos_first, 1);
  pos_last = std::min(pos_last, size);
  if (pos_first > pos_last || band_lo > band_hi) return 0;
  std::vector<int> tails;
  for (std::int64_t p = pos_first; p <= pos_last; ++p) {
    const int v = seq[static_cast<std::size_t>(p - 1)];
    if (v < band_lo || v > band_hi) continue;
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return tails.size();
}

}  // namespace warp_lis
