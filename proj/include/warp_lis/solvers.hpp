#pragma once

#include <cstdint>
#include <vector>

#include "warp_lis/core_model.hpp"
#include "warp_lis/semilocal_index.hpp"

namespace warp_lis {

struct CircularResult {
  std::int64_t distance = 0;
  /// A[shift : m] o A[1 : shift - 1] attains the distance; smallest on ties.
  int shift = 1;

  friend bool operator==(const CircularResult&, const CircularResult&) = default;
};

struct SqrtResult {
  std::int64_t distance = 0;
  /// DTW(A[1 : split], A[split + 1 : m]); smallest on ties.
  int split = 1;

  friend bool operator==(const SqrtResult&, const SqrtResult&) = default;
};

/// B = B_0 o ... o B_ell. `cuts[k]` is the last index of B_k for k < ell, so
/// cuts is strictly increasing with entries in [1, |B| - 1].
///
/// cost = DTW(A[i_first : i_last], B) when ell = 0, otherwise
/// DTW(A[i_first : m], B_0) + sum of DTW(A, B_k) for 0 < k < ell + DTW(A[1 : i_last], B_ell).
struct PeriodicResult {
  std::int64_t cost = 0;
  int ell = 0;
  std::vector<int> cuts;
  int i_first = 1;
  int i_last = 1;

  friend bool operator==(const PeriodicResult&, const PeriodicResult&) = default;
};

/// Everything below takes the A x B table; the TimeSeries overloads build it.
CircularResult circular_dtw(const DissimilarityTable& t, const SeaweedBuildOptions& options = {});
CircularResult circular_dtw(const TimeSeries& a, const TimeSeries& b, const DissimilaritySpec& spec);
CircularResult circular_dtw_naive(const DissimilarityTable& t);
CircularResult circular_dtw_naive(const TimeSeries& a, const TimeSeries& b, const DissimilaritySpec& spec);

/// `t` is the A x A table. Throws Errc::series_too_short when |A| < 2.
SqrtResult sqrt_dtw(const DissimilarityTable& t, const SeaweedBuildOptions& options = {});
SqrtResult sqrt_dtw(const TimeSeries& a, const DissimilaritySpec& spec);
SqrtResult sqrt_dtw_naive(const DissimilarityTable& t);
SqrtResult sqrt_dtw_naive(const TimeSeries& a, const DissimilaritySpec& spec);

/// Ties prefer ell = 0, then the lexicographically smallest cut list, then the
/// smallest i_first, then the largest i_last.
PeriodicResult periodic_dtw(const DissimilarityTable& t, const SeaweedBuildOptions& options = {});
PeriodicResult periodic_dtw(const TimeSeries& a, const TimeSeries& b, const DissimilaritySpec& spec);
/// Same sweep with every edge weight from the quadratic dynamic program.
PeriodicResult periodic_dtw_naive(const DissimilarityTable& t);
PeriodicResult periodic_dtw_naive(const TimeSeries& a, const TimeSeries& b, const DissimilaritySpec& spec);

/// Recomputes the periodic objective of a decomposition with dtw_distance.
/// Throws Errc::invalid_argument if the decomposition is malformed.
std::int64_t periodic_objective(const DissimilarityTable& t, const PeriodicResult& r);

}  // namespace warp_lis
