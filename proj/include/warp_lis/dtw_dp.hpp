#pragma once

#include <algorithm>
#include <utility>

#include <Eigen/Core>

#include "warp_lis/core_model.hpp"

namespace warp_lis {

namespace detail {

// Cumulative cost grid over the subrange: cell (a, b) holds the best
// discrepancy of a path from (i_first, j_first) to (i_first + a, j_first + b).
template <class Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> dtw_cost_grid(
    const Eigen::MatrixBase<Derived>& d, const SubRange& r) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index rows = r.i_last - r.i_first + 1;
  const Eigen::Index cols = r.j_last - r.j_first + 1;
  const auto cell = [&](Eigen::Index a, Eigen::Index b) {
    return d(r.i_first - 1 + a, r.j_first - 1 + b);
  };
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> acc(rows, cols);
  acc(0, 0) = cell(0, 0);
  for (Eigen::Index b = 1; b < cols; ++b) acc(0, b) = acc(0, b - 1) + cell(0, b);
  for (Eigen::Index a = 1; a < rows; ++a) {
    acc(a, 0) = acc(a - 1, 0) + cell(a, 0);
    for (Eigen::Index b = 1; b < cols; ++b) {
      acc(a, b) = cell(a, b) + std::min({acc(a - 1, b - 1), acc(a - 1, b), acc(a, b - 1)});
    }
  }
  return acc;
}

}  // namespace detail

/// DTW distance between A[i_first : i_last] and B[j_first : j_last] by the
/// quadratic dynamic program. Works for any scalar grid (integer or real).
template <class Derived>
typename Derived::Scalar dtw_distance(const Eigen::MatrixBase<Derived>& d, const SubRange& r) {
  check_subrange(r, static_cast<int>(d.rows()), static_cast<int>(d.cols()));
  using Scalar = typename Derived::Scalar;
  const Eigen::Index cols = r.j_last - r.j_first + 1;
  // single rolling row
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> row(cols);
  for (int i = r.i_first; i <= r.i_last; ++i) {
    Scalar diag{};
    for (Eigen::Index b = 0; b < cols; ++b) {
      const Scalar cost = d(i - 1, r.j_first - 1 + b);
      const Scalar up = row(b);
      Scalar best;
      if (i == r.i_first) {
        best = b == 0 ? Scalar{} : row(b - 1);
      } else if (b == 0) {
        best = up;
      } else {
        best = std::min({diag, up, row(b - 1)});
      }
      diag = up;
      row(b) = cost + best;
    }
  }
  return row(cols - 1);
}

/// Full-range convenience overloads over a table.
inline std::int64_t dtw_distance(const DissimilarityTable& t, const SubRange& r) {
  return dtw_distance(t.ints(), r);
}
inline std::int64_t dtw_distance(const DissimilarityTable& t) {
  return dtw_distance(t.ints(), SubRange{1, t.rows(), 1, t.cols()});
}

/// Distance plus one optimal alignment. Backtracking prefers the diagonal
/// predecessor, then the vertical one (i - 1, j), then the horizontal one.
template <class Derived>
std::pair<typename Derived::Scalar, BasicAlignment<typename Derived::Scalar>> dtw_alignment(
    const Eigen::MatrixBase<Derived>& d, const SubRange& r) {
  check_subrange(r, static_cast<int>(d.rows()), static_cast<int>(d.cols()));
  using Scalar = typename Derived::Scalar;
  const auto acc = detail::dtw_cost_grid(d, r);
  BasicAlignment<Scalar> path;
  Eigen::Index a = acc.rows() - 1;
  Eigen::Index b = acc.cols() - 1;
  path.pairs.emplace_back(r.i_first + static_cast<int>(a), r.j_first + static_cast<int>(b));
  while (a > 0 || b > 0) {
    if (a == 0) {
      --b;
    } else if (b == 0) {
      --a;
    } else {
      const Scalar diag = acc(a - 1, b - 1);
      const Scalar vert = acc(a - 1, b);
      const Scalar horiz = acc(a, b - 1);
      if (diag <= vert && diag <= horiz) {
        --a;
        --b;
      } else if (vert <= horiz) {
        --a;
      } else {
        --b;
      }
    }
    path.pairs.emplace_back(r.i_first + static_cast<int>(a), r.j_first + static_cast<int>(b));
  }
  std::reverse(path.pairs.begin(), path.pairs.end());
  path.discrepancy = Scalar{};
  for (const auto& [i, j] : path.pairs) path.discrepancy += d(i - 1, j - 1);
  return {acc(acc.rows() - 1, acc.cols() - 1), std::move(path)};
}

/// Exact DTW for every semi-local query, by repeated dtw_distance. Entries
/// outside the valid triangle are -1.
struct SemilocalTables {
  IntGrid substring_a;        ///< (i_first, i_last): DTW(A[i_first:i_last], B)
  IntGrid substring_b;        ///< (j_first, j_last): DTW(A, B[j_first:j_last])
  IntGrid prefix_a_suffix_b;  ///< (i_last, j_first): DTW(A[1:i_last], B[j_first:n])
  IntGrid suffix_a_prefix_b;  ///< (i_first, j_last): DTW(A[i_first:m], B[1:j_last])
};

SemilocalTables dtw_all_semilocal_naive(const DissimilarityTable& t);

}  // namespace warp_lis
