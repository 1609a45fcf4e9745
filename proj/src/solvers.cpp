#include "warp_lis/solvers.hpp"

#include <limits>
#include <string>

#include "warp_lis/dtw_dp.hpp"

namespace warp_lis {
namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

// Circular shifts over the table of (A o A) x B; `dist` answers a row range.
template <class Dist>
CircularResult best_shift(int m, Dist&& dist) {
  CircularResult best{kInf, 1};
  for (int i = 1; i <= m; ++i) {
    const std::int64_t d = dist(i, i + m - 1);
    if (d < best.distance) best = {d, i};
  }
  return best;
}

template <class Dist>
SqrtResult best_split(int m, Dist&& dist) {
  if (m < 2) throw Error(Errc::series_too_short, "square-root DTW needs at least two samples");
  SqrtResult best{kInf, 1};
  for (int i = 1; i < m; ++i) {
    const std::int64_t d = dist(i);
    if (d < best.distance) best = {d, i};
  }
  return best;
}

// Shortest path through the periodic DAG, swept from the right so the
// reconstruction can pick cuts greedily from the left. `weight` maps a pair of
// subranges to its DTW distance; every range it is asked about is semi-local.
template <class Weight>
PeriodicResult periodic_sweep(int m, int n, Weight&& weight) {
  PeriodicResult best;
  best.cost = kInf;
  for (int i1 = 1; i1 <= m; ++i1) {
    for (int i2 = m; i2 >= i1; --i2) {
      const std::int64_t d = weight(SubRange{i1, i2, 1, n});
      if (d < best.cost) {
        best.cost = d;
        best.i_first = i1;
        best.i_last = i2;
      }
    }
  }
  if (n < 2) return best;

  // rest[j]: cheapest completion once B[1 : j] is consumed (B_k ends at j).
  // finish[j]: best sink edge from there, with its A prefix end.
  std::vector<std::int64_t> rest(static_cast<std::size_t>(n), kInf);
  std::vector<std::int64_t> finish(static_cast<std::size_t>(n), kInf);
  std::vector<int> finish_i(static_cast<std::size_t>(n), 1);
  for (int j = n - 1; j >= 1; --j) {
    const auto ju = static_cast<std::size_t>(j);
    for (int i = m; i >= 1; --i) {
      const std::int64_t d = weight(SubRange{1, i, j + 1, n});
      if (d < finish[ju]) {
        finish[ju] = d;
        finish_i[ju] = i;
      }
    }
    rest[ju] = finish[ju];
    for (int j2 = j + 1; j2 <= n - 1; ++j2) {
      rest[ju] = std::min(rest[ju], weight(SubRange{1, m, j + 1, j2}) + rest[static_cast<std::size_t>(j2)]);
    }
  }

  std::int64_t opt = kInf;
  int first_cut = 0;
  int first_i = 1;
  for (int j = 1; j <= n - 1; ++j) {
    for (int i = 1; i <= m; ++i) {
      const std::int64_t d = weight(SubRange{i, m, 1, j}) + rest[static_cast<std::size_t>(j)];
      if (d < opt) {
        opt = d;
        first_cut = j;
        first_i = i;
      }
    }
  }
  if (opt >= best.cost) return best;

  PeriodicResult out;
  out.cost = opt;
  out.i_first = first_i;
  int j = first_cut;
  out.cuts.push_back(j);
  for (;;) {
    const auto ju = static_cast<std::size_t>(j);
    if (finish[ju] == rest[ju]) {
      out.i_last = finish_i[ju];
      break;
    }
    int next = 0;
    for (int j2 = j + 1; j2 <= n - 1 && next == 0; ++j2) {
      if (weight(SubRange{1, m, j + 1, j2}) + rest[static_cast<std::size_t>(j2)] == rest[ju]) next = j2;
    }
    if (next == 0) throw Error(Errc::invariant_violation, "periodic path reconstruction failed");
    j = next;
    out.cuts.push_back(j);
  }
  out.ell = static_cast<int>(out.cuts.size());
  return out;
}

}  // namespace

CircularResult circular_dtw(const DissimilarityTable& t, const SeaweedBuildOptions& options) {
  const int m = t.rows();
  const SemiLocalDtwIndex index = build_index(t.tile_rows(2), options);
  return best_shift(m, [&](int i1, int i2) { return index.distance(SubstringVsWholeB{i1, i2}); });
}

CircularResult circular_dtw_naive(const DissimilarityTable& t) {
  const int m = t.rows();
  const int n = t.cols();
  const DissimilarityTable doubled = t.tile_rows(2);
  return best_shift(m, [&](int i1, int i2) { return dtw_distance(doubled, SubRange{i1, i2, 1, n}); });
}

SqrtResult sqrt_dtw(const DissimilarityTable& t, const SeaweedBuildOptions& options) {
  const int m = t.rows();
  if (m < 2) return best_split(m, [](int) { return std::int64_t{0}; });
  const SemiLocalDtwIndex index = build_index(t, options);
  return best_split(m, [&](int i) { return index.distance(PrefixAVsSuffixB{i, i + 1}); });
}

SqrtResult sqrt_dtw_naive(const DissimilarityTable& t) {
  const int m = t.rows();
  return best_split(m, [&](int i) { return dtw_distance(t, SubRange{1, i, i + 1, m}); });
}

PeriodicResult periodic_dtw(const DissimilarityTable& t, const SeaweedBuildOptions& options) {
  const SemiLocalDtwIndex index = build_index(t, options);
  return periodic_sweep(t.rows(), t.cols(), [&](const SubRange& r) { return index.query(r).distance; });
}

PeriodicResult periodic_dtw_naive(const DissimilarityTable& t) {
  return periodic_sweep(t.rows(), t.cols(), [&](const SubRange& r) { return dtw_distance(t, r); });
}

CircularResult circular_dtw(const TimeSeries& a, const TimeSeries& b, const DissimilaritySpec& spec) {
  return circular_dtw(build_dissimilarity(a, b, spec));
}
CircularResult circular_dtw_naive(const TimeSeries& a, const TimeSeries& b, const DissimilaritySpec& spec) {
  return circular_dtw_naive(build_dissimilarity(a, b, spec));
}
SqrtResult sqrt_dtw(const TimeSeries& a, const DissimilaritySpec& spec) {
  return sqrt_dtw(build_dissimilarity(a, a, spec));
}
SqrtResult sqrt_dtw_naive(const TimeSeries& a, const DissimilaritySpec& spec) {
  return sqrt_dtw_naive(build_dissimilarity(a, a, spec));
}
PeriodicResult periodic_dtw(const TimeSeries& a, const TimeSeries& b, const DissimilaritySpec& spec) {
  return periodic_dtw(build_dissimilarity(a, b, spec));
}
PeriodicResult periodic_dtw_naive(const TimeSeries& a, const TimeSeries& b, const DissimilaritySpec& spec) {
  return periodic_dtw_naive(build_dissimilarity(a, b, spec));
}

std::int64_t periodic_objective(const DissimilarityTable& t, const PeriodicResult& r) {
  const int m = t.rows();
  const int n = t.cols();
  const auto bad = [](const std::string& why) { return Error(Errc::invalid_argument, why); };
  if (r.ell != static_cast<int>(r.cuts.size())) throw bad("ell does not match the number of cuts");
  if (r.i_first < 1 || r.i_first > m || r.i_last < 1 || r.i_last > m) {
    throw bad("A indices out of range");
  }
  if (r.ell == 0) {
    if (r.i_first > r.i_last) throw bad("i_first > i_last with a single block");
    return dtw_distance(t, SubRange{r.i_first, r.i_last, 1, n});
  }
  int prev = 0;
  for (const int c : r.cuts) {
    if (c <= prev || c >= n) throw bad("cuts must increase strictly within [1, |B| - 1]");
    prev = c;
  }
  std::int64_t cost = dtw_distance(t, SubRange{r.i_first, m, 1, r.cuts.front()});
  for (std::size_t k = 1; k < r.cuts.size(); ++k) {
    cost += dtw_distance(t, SubRange{1, m, r.cuts[k - 1] + 1, r.cuts[k]});
  }
  cost += dtw_distance(t, SubRange{1, r.i_last, r.cuts.back() + 1, n});
  return cost;
}

}  // namespace warp_lis
