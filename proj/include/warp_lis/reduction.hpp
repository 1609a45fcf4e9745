#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "warp_lis/core_model.hpp"

namespace warp_lis {

/// Grid coordinates of an element of the weighted sequence. Elements created
/// for a diagonal step ("tilde" elements) sit half a cell up-left of (i, j).
struct GridPoint {
  int i = 0;
  int j = 0;
  bool tilde = false;

  double row() const noexcept { return tilde ? i - 0.5 : i; }
  double col() const noexcept { return tilde ? j - 0.5 : j; }
};

/// Weighted integer sequence encoding the DTW grid.
///
/// Every cell (i, j) contributes an element of weight c - d(i, j); every
/// interior corner (i, j) with i, j >= 2 contributes a tilde element of weight c.
/// Elements are laid out row-wise in forward-backward alternation, and their
/// values rank them column-wise in the same alternation, so that warping paths
/// become banded increasing subsequences. Positions are 1-based.
class WeightedReduction {
 public:
  explicit WeightedReduction(const DissimilarityTable& table);

  int rows() const noexcept { return m_; }
  int cols() const noexcept { return n_; }
  std::int64_t cap() const noexcept { return c_; }
  double real_cap() const noexcept { return real_c_; }
  std::int64_t length() const noexcept { return static_cast<std::int64_t>(values_.size()); }

  int value(std::int64_t f) const { return values_[static_cast<std::size_t>(f - 1)]; }
  std::int64_t weight(std::int64_t f) const { return weights_[static_cast<std::size_t>(f - 1)]; }
  double real_weight(std::int64_t f) const { return real_weights_[static_cast<std::size_t>(f - 1)]; }
  GridPoint coord(std::int64_t f) const { return coords_[static_cast<std::size_t>(f - 1)]; }

  std::span<const int> values() const noexcept { return values_; }
  std::span<const std::int64_t> weights() const noexcept { return weights_; }
  std::span<const double> real_weights() const noexcept { return real_weights_; }

  std::int64_t position_of_cell(int i, int j) const noexcept {
    return static_cast<std::int64_t>(i - 1) * (2 * n_ - 1) + j;
  }
  std::int64_t value_of_cell(int i, int j) const noexcept {
    return static_cast<std::int64_t>(j - 1) * (2 * m_ - 1) + i;
  }
  std::int64_t position_of_corner(int i, int j) const noexcept {
    return static_cast<std::int64_t>(i - 1) * (2 * n_ - 1) - j + 2;
  }
  std::int64_t value_of_corner(int i, int j) const noexcept {
    return static_cast<std::int64_t>(j - 1) * (2 * m_ - 1) - i + 2;
  }

 private:
  int m_;
  int n_;
  std::int64_t c_;
  double real_c_;
  std::vector<int> values_;
  std::vector<std::int64_t> weights_;
  std::vector<double> real_weights_;
  std::vector<GridPoint> coords_;
};

inline WeightedReduction build_weighted_reduction(const DissimilarityTable& table) {
  return WeightedReduction(table);
}

/// The unweighted DTW distance sequence: each weighted element expanded into a
/// run of consecutive integers, plus the row/column lookup arrays. All stored
/// indices are 1-based; inclusive ranges with first > last are empty.
struct DtwSequence {
  int rows = 0;
  int cols = 0;
  std::int64_t cap = 0;
  std::vector<int> seq;

  // Per weighted element, indexed by position f - 1.
  std::vector<int> run_first_pos;
  std::vector<int> run_last_pos;
  std::vector<int> run_low_value;
  std::vector<int> run_high_value;

  std::vector<int> row_first_pos;   ///< first position of row i's block in seq
  std::vector<int> row_last_pos;    ///< last position of row i's block in seq
  std::vector<int> col_low_value;   ///< lowest value owned by column j
  std::vector<int> col_high_value;  ///< highest value owned by column j

  int size() const noexcept { return static_cast<int>(seq.size()); }
};

DtwSequence build_dtw_sequence(const WeightedReduction& red);

/// c * ((i_last - i_first) + (j_last - j_first) + 1): the total weight of a
/// path's encoding when every cell had zero dissimilarity.
std::int64_t warp_constant(std::int64_t c, const SubRange& r);
double warp_constant(double c, const SubRange& r);

/// DTW through the banded LIS of the unweighted sequence.
std::int64_t dtw_via_banded_lis(const DtwSequence& s, const SubRange& r);

/// DTW through the banded HIS over the widened position range and value band.
std::int64_t dtw_via_banded_his(const WeightedReduction& red, const SubRange& r);
double dtw_via_banded_his_real(const WeightedReduction& red, const SubRange& r);

/// Same identity restricted to the tight range [f(i_first, j_first), f(i_last, j_last)].
std::int64_t dtw_via_banded_his_tight(const WeightedReduction& red, const SubRange& r);

}  // namespace warp_lis
