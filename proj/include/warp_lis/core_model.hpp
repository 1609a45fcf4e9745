#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "warp_lis/error.hpp"

namespace warp_lis {

using IntGrid = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using RealGrid = Eigen::MatrixXd;

/// A nonempty sequence of real samples.
class TimeSeries {
 public:
  explicit TimeSeries(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  /// 1-based access.
  double at(std::size_t i) const { return values_.at(i - 1); }
  const std::vector<double>& values() const noexcept { return values_; }

  TimeSeries concat(const TimeSeries& tail) const;

 private:
  std::vector<double> values_;
};

enum class SeriesFormat { csv, json };

/// Parses a series. CSV accepts one sample per line or comma-separated values;
/// JSON expects a flat array of numbers.
TimeSeries parse_time_series(std::string_view text, SeriesFormat format);

/// JSON array of rows, each a list of nonnegative numbers.
RealGrid parse_matrix_json(std::string_view text);

enum class DissimilarityKind { absolute_difference, squared_difference, explicit_matrix };
enum class Rounding { nearest_half_up };

struct DissimilaritySpec {
  DissimilarityKind kind = DissimilarityKind::absolute_difference;
  Rounding rounding = Rounding::nearest_half_up;
  std::optional<std::int64_t> cap_override;
  /// Required when kind == explicit_matrix; |A| x |B| nonnegative entries.
  RealGrid matrix;

  static DissimilaritySpec absolute(std::optional<std::int64_t> cap = std::nullopt) {
    return {DissimilarityKind::absolute_difference, Rounding::nearest_half_up, cap, {}};
  }
  static DissimilaritySpec squared(std::optional<std::int64_t> cap = std::nullopt) {
    return {DissimilarityKind::squared_difference, Rounding::nearest_half_up, cap, {}};
  }
  static DissimilaritySpec explicit_grid(RealGrid grid,
                                         std::optional<std::int64_t> cap = std::nullopt) {
    return {DissimilarityKind::explicit_matrix, Rounding::nearest_half_up, cap, std::move(grid)};
  }
};

std::int64_t round_half_up(double x);

/// Rounded integer dissimilarities d(i, j) in [0, c], plus the unrounded reals.
///
/// All accessors taking (i, j) are 1-based. `ints()` and `reals()` expose the
/// underlying 0-based Eigen grids.
class DissimilarityTable {
 public:
  /// Builds from an integer grid; c defaults to the grid maximum.
  static DissimilarityTable from_ints(IntGrid d, std::optional<std::int64_t> cap = std::nullopt);
  /// Builds from a real grid: entries are rounded half-up and clamped to the cap.
  static DissimilarityTable from_reals(RealGrid real, std::optional<std::int64_t> cap = std::nullopt);

  int rows() const noexcept { return static_cast<int>(d_.rows()); }
  int cols() const noexcept { return static_cast<int>(d_.cols()); }
  std::int64_t cap() const noexcept { return c_; }
  double real_cap() const noexcept { return real_c_; }

  std::int64_t operator()(int i, int j) const { return d_(i - 1, j - 1); }
  double real(int i, int j) const { return real_d_(i - 1, j - 1); }

  const IntGrid& ints() const noexcept { return d_; }
  const RealGrid& reals() const noexcept { return real_d_; }
  std::int64_t sum() const { return d_.sum(); }

  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  /// Same dissimilarities under a different cap (c' must be >= max d).
  DissimilarityTable with_cap(std::int64_t cap) const;
  /// Rows repeated `times` times: the table of (A o A o ...) against B.
  DissimilarityTable tile_rows(int times) const;

 private:
  IntGrid d_;
  RealGrid real_d_;
  std::int64_t c_ = 0;
  double real_c_ = 0.0;
  std::vector<std::string> warnings_;
};

DissimilarityTable build_dissimilarity(const TimeSeries& a, const TimeSeries& b,
                                       const DissimilaritySpec& spec);

/// 1-based inclusive subranges A[i_first : i_last] and B[j_first : j_last].
struct SubRange {
  int i_first = 1;
  int i_last = 1;
  int j_first = 1;
  int j_last = 1;

  friend bool operator==(const SubRange&, const SubRange&) = default;
};

/// Throws Errc::out_of_range unless 1 <= i_first <= i_last <= m and likewise for j.
void check_subrange(const SubRange& r, int m, int n);

template <class Scalar>
struct BasicAlignment {
  std::vector<std::pair<int, int>> pairs;
  Scalar discrepancy{};
};

using Alignment = BasicAlignment<std::int64_t>;

/// True iff `pairs` is a legal warping path for the subrange.
bool is_valid_alignment(const std::vector<std::pair<int, int>>& pairs, const SubRange& r);

}  // namespace warp_lis
