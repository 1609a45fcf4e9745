#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "warp_lis/error.hpp"

namespace warp_lis {

/// Semi-local LIS permutation of a permutation S of 1..n.
///
/// `pi` has 2n entries and stores Pi[k] at pi[k - 1]. With
///   count(k_lo, k_hi) = #{ k : k_lo < k <= 2n, Pi[k] <= k_hi },
/// min(k_hi, n) - max(0, k_lo - n) - count(k_lo, k_hi) is a banded LIS length
/// of S for every pair covered by a `LemmaCase`.
struct SeaweedPermutation {
  int n = 0;
  std::vector<int> pi;

  int operator[](int k) const { return pi[static_cast<std::size_t>(k - 1)]; }
  int size() const noexcept { return 2 * n; }

  friend bool operator==(const SeaweedPermutation&, const SeaweedPermutation&) = default;
};

/// Which semi-local LIS a (k_lo, k_hi) pair encodes; n = |S|.
enum class LemmaCase {
  suffix_low_band = 1,   ///< S[n-k_lo+1 : n], band [1 : k_hi]
  prefix_high_band = 2,  ///< S[1 : 2n-k_hi], band [k_lo-n+1 : n]
  whole_band = 3,        ///< all of S, band [k_lo-n+1 : k_hi]
  window = 4,            ///< S[n-k_lo+1 : 2n-k_hi], unbanded
};

/// True iff 1 <= k_lo, k_hi <= 2n - 1 and the pair meets the case's conditions.
bool lemma_covers(int n, int k_lo, int k_hi, LemmaCase which);

std::optional<LemmaCase> classify_pair(int n, int k_lo, int k_hi);

/// Position range and band (1-based, inclusive) that a covered pair encodes.
struct BandedQuery {
  std::int64_t pos_first, pos_last, band_lo, band_hi;
};
BandedQuery lemma_query(int n, int k_lo, int k_hi, LemmaCase which);

/// Brute-force count(k_lo, k_hi) by a linear scan.
int scan_count(const SeaweedPermutation& sw, int k_lo, int k_hi);

/// Evaluates the semi-local identity for a covered pair using `count`, any
/// callable (k_lo, k_hi) -> count. Throws Errc::unsupported_pair otherwise.
template <class Counter>
int semilocal_lis_value(const SeaweedPermutation& sw, Counter&& count, int k_lo, int k_hi) {
  const int n = sw.n;
  if (k_lo < 1 || k_hi < 1 || k_lo > 2 * n - 1 || k_hi > 2 * n - 1 || !classify_pair(n, k_lo, k_hi)) {
    throw Error(Errc::unsupported_pair, "pair (" + std::to_string(k_lo) + ", " +
                                            std::to_string(k_hi) + ") is not covered for n = " +
                                            std::to_string(n));
  }
  const int base = (k_hi < n ? k_hi : n) - (k_lo > n ? k_lo - n : 0);
  return base - static_cast<int>(count(k_lo, k_hi));
}

/// Reference construction: derives Pi from brute-force banded LIS values and
/// validates the round trip. Intended for n up to a few dozen.
SeaweedPermutation seaweed_oracle(std::span<const int> s);

/// Quadratic cell-by-cell seaweed combing of S against 1..n.
SeaweedPermutation build_seaweed_baseline(std::span<const int> s);

struct SeaweedBuildOptions {
  /// Subproblems with at most this many elements use the combing baseline.
  int cutoff = 64;
};

/// Divide and conquer on the value range, merging halves with the steady ant.
SeaweedPermutation build_seaweed_dc(std::span<const int> s, const SeaweedBuildOptions& options = {});

/// Merges the permutations of the two value halves of S. `lo` belongs to the
/// subsequence of values <= lo.n, `hi` to the rest (relabelled from 1);
/// `is_low[r]` tells which half S[r + 1] belongs to.
SeaweedPermutation steady_ant_merge(const SeaweedPermutation& lo, const SeaweedPermutation& hi,
                                    std::span<const char> is_low);

/// Unit-Monge distance product of two 0-based permutations (row -> column):
/// R(i, k) sums satisfy R'(i, k) = min_j P'(i, j) + Q'(j, k), where
/// X'(i, k) = #{ nonzeros (i2, k2) of X : i2 >= i, k2 < k }.
std::vector<int> sticky_multiply(std::span<const int> p, std::span<const int> q);

}  // namespace warp_lis
