#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "warp_lis/dtw_dp.hpp"
#include "warp_lis/lis_kernel.hpp"
#include "warp_lis/semilocal_index.hpp"

using namespace warp_lis;

namespace {

DissimilarityTable abs_table(std::vector<double> a, std::vector<double> b) {
  return build_dissimilarity(TimeSeries(std::move(a)), TimeSeries(std::move(b)), DissimilaritySpec::absolute());
}

std::vector<QueryShape> all_shapes(int m, int n) {
  std::vector<QueryShape> out;
  for (int i1 = 1; i1 <= m; ++i1)
    for (int i2 = i1; i2 <= m; ++i2) out.push_back(SubstringVsWholeB{i1, i2});
  for (int j1 = 1; j1 <= n; ++j1)
    for (int j2 = j1; j2 <= n; ++j2) out.push_back(WholeAVsSubstring{j1, j2});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) {
      out.push_back(PrefixAVsSuffixB{i, j});
      out.push_back(SuffixAVsPrefixB{i, j});
    }
  return out;
}

}  // namespace

TEST(SemiLocalIndex, RunningInstance) {
  const auto index = build_index(TimeSeries({0, 1}), TimeSeries({1, 1}), DissimilaritySpec::absolute());
  EXPECT_EQ(index.width(), 3);
  EXPECT_EQ(index.distance(SubstringVsWholeB{1, 2}), 1);
  EXPECT_EQ(index.distance(SuffixAVsPrefixB{2, 2}), 0);
  EXPECT_EQ(index.distance(PrefixAVsSuffixB{1, 2}), 1);
  EXPECT_EQ(index.distance(SubstringVsWholeB{1, 1}), 2);

  const LemmaParams sp = map_query_to_lemma_params(SuffixAVsPrefixB{2, 2}, index.sequence());
  EXPECT_EQ(sp.k_lo, 2);
  EXPECT_EQ(sp.k_hi, 3);
  EXPECT_EQ(sp.expected, LemmaCase::suffix_low_band);
  EXPECT_TRUE(sp.covered);
  const LemmaParams sa = map_query_to_lemma_params(SubstringVsWholeB{1, 2}, index.sequence());
  EXPECT_EQ(sa.k_lo, 3);
  EXPECT_EQ(sa.k_hi, 3);
  EXPECT_EQ(sa.expected, LemmaCase::window);
  EXPECT_TRUE(sa.covered);
}

TEST(SemiLocalIndex, WidestQueryIsGlobalLis) {
  std::mt19937_64 rng(51);
  const auto t = DissimilarityTable::from_ints(oracle::random_grid(rng, 5, 6, 3));
  const auto index = build_index(t);
  const LemmaParams p = map_query_to_lemma_params(WholeAVsSubstring{1, 6}, index.sequence());
  EXPECT_EQ(p.k_lo, index.width());
  EXPECT_EQ(p.k_hi, index.width());
  EXPECT_EQ(index.distance(WholeAVsSubstring{1, 6}),
            warp_constant(t.cap(), {1, 5, 1, 6}) - static_cast<std::int64_t>(lis_length(index.sequence().seq)));
}

TEST(SemiLocalIndex, DegenerateInstances) {
  const auto one = build_index(TimeSeries({5}), TimeSeries({5}), DissimilaritySpec::absolute(3));
  EXPECT_EQ(one.distance(SubstringVsWholeB{1, 1}), 0);
  EXPECT_EQ(one.distance(WholeAVsSubstring{1, 1}), 0);
  EXPECT_EQ(one.distance(PrefixAVsSuffixB{1, 1}), 0);
  EXPECT_EQ(one.distance(SuffixAVsPrefixB{1, 1}), 0);

  const auto diff = build_index(TimeSeries({5}), TimeSeries({7}), DissimilaritySpec::squared());
  EXPECT_EQ(diff.distance(SuffixAVsPrefixB{1, 1}), 4);

  const auto zero = build_index(DissimilarityTable::from_ints(IntGrid::Zero(3, 4)));
  EXPECT_EQ(zero.width(), 0);
  for (const auto& q : all_shapes(3, 4)) EXPECT_EQ(zero.distance(q), 0);
}

TEST(SemiLocalIndex, IdenticalSeries) {
  const TimeSeries a({3, 1, 4, 1, 5});
  const auto index = build_index(a, a, DissimilaritySpec::absolute());
  EXPECT_EQ(index.distance(WholeAVsSubstring{1, 5}), 0);
  EXPECT_EQ(index.distance(SubstringVsWholeB{1, 5}), 0);
}

TEST(SemiLocalIndex, RejectsFullyLocalAndBadIndices) {
  const auto index = build_index(TimeSeries({0, 1, 2}), TimeSeries({1, 1, 0}), DissimilaritySpec::absolute());
  try {
    index.query(SubRange{2, 2, 2, 2});
    FAIL() << "expected an unsupported-query error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unsupported_query);
  }
  EXPECT_EQ(index.query(SubRange{1, 2, 2, 3}).distance, index.distance(PrefixAVsSuffixB{2, 2}));
  EXPECT_THROW(index.query(SubstringVsWholeB{2, 1}), Error);
  EXPECT_THROW(index.query(PrefixAVsSuffixB{4, 1}), Error);
}

TEST(SemiLocalIndex, AgreesWithDpOnAllShapes) {
  std::mt19937_64 rng(52);
  int fallbacks = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 8);
    const int n = 1 + static_cast<int>(rng() % 8);
    const auto a = TimeSeries(oracle::random_values(rng, m, 3));
    const auto b = TimeSeries(oracle::random_values(rng, n, 3));
    const auto spec = trial % 2 ? DissimilaritySpec::squared() : DissimilaritySpec::absolute();
    const auto t = build_dissimilarity(a, b, spec);
    const auto index = build_index(t);
    for (const auto& q : all_shapes(m, n)) {
      const QueryResult r = index.query(q);
      ASSERT_EQ(r.distance, dtw_distance(t, implied_range(q, m, n)));
      fallbacks += r.fallback;
      const LemmaParams p = map_query_to_lemma_params(q, index.sequence());
      // an empty sequence needs neither path
      if (index.width() > 0) ASSERT_EQ(r.fallback, !p.covered);
    }
  }
  // Degenerate boundaries are rare; the seaweed path must carry most queries.
  EXPECT_LT(fallbacks, 1000);
}

TEST(SemiLocalIndex, FallbackStillExact) {
  // Every cell of row 1 at the cap empties row 1's runs, so G(1) collapses.
  IntGrid d(3, 3);
  d << 2, 2, 2, 0, 1, 0, 1, 0, 2;
  const auto t = DissimilarityTable::from_ints(d);
  const auto index = build_index(t);
  bool saw_fallback = false;
  for (const auto& q : all_shapes(3, 3)) {
    const QueryResult r = index.query(q);
    ASSERT_EQ(r.distance, dtw_distance(t, implied_range(q, 3, 3)));
    saw_fallback = saw_fallback || r.fallback;
  }
  EXPECT_TRUE(saw_fallback);
}

TEST(SemiLocalIndex, BoundaryIdentitiesChecked) {
  auto seq = build_dtw_sequence(WeightedReduction(abs_table({0, 1}, {1, 1})));
  auto sw = build_seaweed_dc(seq.seq);
  auto broken = seq;
  broken.col_low_value[0] = 2;
  EXPECT_THROW(SemiLocalDtwIndex(broken, sw), Error);
  EXPECT_NO_THROW(SemiLocalDtwIndex(seq, sw));
}
