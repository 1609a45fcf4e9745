#pragma once

#include <cstdint>
#include <variant>

#include "warp_lis/core_model.hpp"
#include "warp_lis/range_index.hpp"
#include "warp_lis/reduction.hpp"
#include "warp_lis/seaweed.hpp"

namespace warp_lis {

/// DTW(A[i_first : i_last], B)
struct SubstringVsWholeB {
  int i_first, i_last;
};
/// DTW(A, B[j_first : j_last])
struct WholeAVsSubstring {
  int j_first, j_last;
};
/// DTW(A[1 : i_last], B[j_first : n])
struct PrefixAVsSuffixB {
  int i_last, j_first;
};
/// DTW(A[i_first : m], B[1 : j_last])
struct SuffixAVsPrefixB {
  int i_first, j_last;
};

using QueryShape = std::variant<SubstringVsWholeB, WholeAVsSubstring, PrefixAVsSuffixB, SuffixAVsPrefixB>;

/// The subranges a shape stands for in an m x n instance.
SubRange implied_range(const QueryShape& shape, int m, int n);

/// The semi-local shape matching a subrange. Throws Errc::unsupported_query
/// when neither side is whole and it is not a prefix/suffix pair.
QueryShape shape_of(const SubRange& r, int m, int n);

/// Seaweed pair for a shape together with the case it is meant to hit.
/// `covered` is false when degenerate boundaries push the pair outside it.
struct LemmaParams {
  int k_lo = 0;
  int k_hi = 0;
  LemmaCase expected = LemmaCase::window;
  bool covered = false;
};

LemmaParams map_query_to_lemma_params(const QueryShape& shape, const DtwSequence& seq);

struct QueryResult {
  std::int64_t distance = 0;
  /// Answered by a direct banded LIS scan instead of the seaweed identity.
  bool fallback = false;
};

/// Answers the four semi-local DTW query shapes in O(log W) each.
/// Immutable after construction; concurrent queries are safe.
class SemiLocalDtwIndex {
 public:
  /// Takes a sequence whose G/H arrays and seq are filled; the run arrays are
  /// optional. Checks the boundary identities and throws
  /// Errc::invariant_violation if they fail.
  SemiLocalDtwIndex(DtwSequence seq, SeaweedPermutation sw);

  int rows() const noexcept { return seq_.rows; }
  int cols() const noexcept { return seq_.cols; }
  std::int64_t cap() const noexcept { return seq_.cap; }
  int width() const noexcept { return seq_.size(); }

  const DtwSequence& sequence() const noexcept { return seq_; }
  const SeaweedPermutation& permutation() const noexcept { return sw_; }
  const RangeCountIndex& counter() const noexcept { return rc_; }

  QueryResult query(const QueryShape& shape) const;
  std::int64_t distance(const QueryShape& shape) const { return query(shape).distance; }
  /// Any semi-local subrange; fully local ones throw Errc::unsupported_query.
  QueryResult query(const SubRange& r) const { return query(shape_of(r, rows(), cols())); }

 private:
  DtwSequence seq_;
  SeaweedPermutation sw_;
  RangeCountIndex rc_;
};

SemiLocalDtwIndex build_index(const DissimilarityTable& table, const SeaweedBuildOptions& options = {});
SemiLocalDtwIndex build_index(const TimeSeries& a, const TimeSeries& b, const DissimilaritySpec& spec,
                              const SeaweedBuildOptions& options = {});

}  // namespace warp_lis
