#include "warp_lis/dtw_dp.hpp"

namespace warp_lis {

SemilocalTables dtw_all_semilocal_naive(const DissimilarityTable& t) {
  const int m = t.rows();
  const int n = t.cols();
  SemilocalTables out;
  out.substring_a = IntGrid::Constant(m, m, -1);
  out.substring_b = IntGrid::Constant(n, n, -1);
  out.prefix_a_suffix_b = IntGrid::Constant(m, n, -1);
  out.suffix_a_prefix_b = IntGrid::Constant(m, n, -1);
  for (int i1 = 1; i1 <= m; ++i1)
    for (int i2 = i1; i2 <= m; ++i2) out.substring_a(i1 - 1, i2 - 1) = dtw_distance(t, {i1, i2, 1, n});
  for (int j1 = 1; j1 <= n; ++j1)
    for (int j2 = j1; j2 <= n; ++j2) out.substring_b(j1 - 1, j2 - 1) = dtw_distance(t, {1, m, j1, j2});
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      out.prefix_a_suffix_b(i - 1, j - 1) = dtw_distance(t, {1, i, j, n});
      out.suffix_a_prefix_b(i - 1, j - 1) = dtw_distance(t, {i, m, 1, j});
    }
  }
  return out;
}

}  // namespace warp_lis
