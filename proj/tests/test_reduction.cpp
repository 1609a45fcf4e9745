#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "warp_lis/dtw_dp.hpp"
#include "warp_lis/reduction.hpp"

using namespace warp_lis;

namespace {

DissimilarityTable abs_table(std::vector<double> a, std::vector<double> b) {
  return build_dissimilarity(TimeSeries(std::move(a)), TimeSeries(std::move(b)), DissimilaritySpec::absolute());
}

// S and its lookup arrays rebuilt from the walked layout, straight from the
// run definitions.
struct Expanded {
  std::vector<int> seq, gl, gr, hl, hr;
};

Expanded expand(const DissimilarityTable& t) {
  const int m = t.rows();
  const int n = t.cols();
  const auto weight = [&](const oracle::WalkedElement& e) { return e.tilde ? t.cap() : t.cap() - t(e.i, e.j); };
  const auto key = [&](const oracle::WalkedElement& e) { return (e.i * (n + 1) + e.j) * 2 + (e.tilde ? 1 : 0); };
  std::vector<int> pos_end(static_cast<std::size_t>(2 * (m + 1) * (n + 1) + 2));
  std::vector<int> val_end(pos_end.size());
  int acc = 0;
  for (const auto& e : oracle::walk_positions(m, n)) pos_end[key(e)] = acc += static_cast<int>(weight(e));
  acc = 0;
  for (const auto& e : oracle::walk_values(m, n)) val_end[key(e)] = acc += static_cast<int>(weight(e));
  Expanded x;
  for (const auto& e : oracle::walk_positions(m, n)) {
    const int w = static_cast<int>(weight(e));
    for (int v = val_end[key(e)] - w + 1; v <= val_end[key(e)]; ++v) x.seq.push_back(v);
  }
  for (int i = 1; i <= m; ++i) {
    const oracle::WalkedElement first{i, 1, false};
    x.gl.push_back(pos_end[key(first)] - static_cast<int>(weight(first)) + 1);
    x.gr.push_back(pos_end[key({i, n, false})]);
  }
  for (int j = 1; j <= n; ++j) {
    const oracle::WalkedElement low{1, j, false};
    x.hl.push_back(val_end[key(low)] - static_cast<int>(weight(low)) + 1);
    x.hr.push_back(val_end[key({m, j, false})]);
  }
  return x;
}

}  // namespace

TEST(WeightedReduction, GridFourByFour) {
  const DissimilarityTable t = DissimilarityTable::from_ints(IntGrid::Zero(4, 4), 1);
  const WeightedReduction red(t);
  EXPECT_EQ(red.length(), 25);
  EXPECT_EQ(red.position_of_cell(2, 1), 8);
  EXPECT_EQ(red.value_of_cell(2, 1), 2);
  EXPECT_EQ(red.position_of_cell(2, 2), 9);
  EXPECT_EQ(red.value_of_cell(2, 2), 9);
  EXPECT_EQ(red.position_of_cell(3, 2), 16);
  EXPECT_EQ(red.value_of_cell(3, 2), 10);
  EXPECT_EQ(red.position_of_corner(4, 3), 20);
  EXPECT_EQ(red.value_of_corner(4, 3), 12);
  EXPECT_EQ(red.position_of_cell(4, 3), 24);
  EXPECT_EQ(red.value_of_cell(4, 3), 18);
  EXPECT_EQ(red.value(20), 12);
  EXPECT_TRUE(red.coord(20).tilde);
  EXPECT_DOUBLE_EQ(red.coord(20).row(), 3.5);
}

TEST(WeightedReduction, SingleCell) {
  const auto t = abs_table({2}, {5});
  const WeightedReduction red(t);
  ASSERT_EQ(red.length(), 1);
  EXPECT_EQ(red.value(1), 1);
  EXPECT_EQ(red.weight(1), t.cap() - t(1, 1));
}

TEST(WeightedReduction, TwoByTwoValueOrder) {
  const WeightedReduction red(abs_table({0, 1}, {1, 1}));
  const std::vector<int> values(red.values().begin(), red.values().end());
  EXPECT_EQ(values, (std::vector<int>{1, 4, 3, 2, 5}));
  const std::vector<std::int64_t> weights(red.weights().begin(), red.weights().end());
  EXPECT_EQ(weights, (std::vector<std::int64_t>{0, 0, 1, 1, 1}));
}

TEST(WeightedReduction, MatchesWalkedLayout) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto t = DissimilarityTable::from_ints(oracle::random_grid(rng, m, n, 3));
    const WeightedReduction red(t);
    const auto pos = oracle::walk_positions(m, n);
    const auto val = oracle::walk_values(m, n);
    ASSERT_EQ(red.length(), static_cast<std::int64_t>(pos.size()));
    for (std::size_t f = 0; f < pos.size(); ++f) {
      const auto& e = pos[f];
      const auto rank = std::find_if(val.begin(), val.end(), [&](const auto& x) {
                          return x.i == e.i && x.j == e.j && x.tilde == e.tilde;
                        }) - val.begin() + 1;
      const auto fq = static_cast<std::int64_t>(f + 1);
      ASSERT_EQ(red.value(fq), rank);
      ASSERT_EQ(red.coord(fq).i, e.i);
      ASSERT_EQ(red.coord(fq).j, e.j);
      ASSERT_EQ(red.coord(fq).tilde, e.tilde);
      ASSERT_EQ(red.weight(fq), e.tilde ? t.cap() : t.cap() - t(e.i, e.j));
    }
  }
}

TEST(DtwSequence, RunningInstance) {
  const DtwSequence s = build_dtw_sequence(WeightedReduction(abs_table({0, 1}, {1, 1})));
  EXPECT_EQ(s.seq, (std::vector<int>{2, 1, 3}));
  EXPECT_EQ(s.row_first_pos, (std::vector<int>{1, 2}));
  EXPECT_EQ(s.row_last_pos, (std::vector<int>{0, 3}));
  EXPECT_EQ(s.col_low_value, (std::vector<int>{1, 3}));
  EXPECT_EQ(s.col_high_value, (std::vector<int>{1, 3}));
}

TEST(DtwSequence, SaturatedAndZeroTables) {
  const auto full = DissimilarityTable::from_ints(IntGrid::Constant(3, 4, 2));
  EXPECT_EQ(build_dtw_sequence(WeightedReduction(full)).size(), 2 * 2 * 3);
  const auto zero = DissimilarityTable::from_ints(IntGrid::Zero(3, 4));
  EXPECT_EQ(build_dtw_sequence(WeightedReduction(zero)).size(), 0);
}

TEST(DtwSequence, MatchesRunExpansion) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto t = DissimilarityTable::from_ints(oracle::random_grid(rng, m, n, 3),
                                                 3 + static_cast<int>(rng() % 2));
    const DtwSequence s = build_dtw_sequence(WeightedReduction(t));
    const Expanded x = expand(t);
    ASSERT_EQ(s.seq, x.seq);
    ASSERT_EQ(s.row_first_pos, x.gl);
    ASSERT_EQ(s.row_last_pos, x.gr);
    ASSERT_EQ(s.col_low_value, x.hl);
    ASSERT_EQ(s.col_high_value, x.hr);
    for (std::size_t q = 0; q < s.run_first_pos.size(); ++q) {
      ASSERT_EQ(s.run_last_pos[q] - s.run_first_pos[q], s.run_high_value[q] - s.run_low_value[q]);
    }
  }
}

TEST(WarpConstant, Examples) {
  EXPECT_EQ(warp_constant(std::int64_t{1}, SubRange{1, 2, 1, 2}), 3);
  EXPECT_EQ(warp_constant(std::int64_t{4}, SubRange{2, 4, 1, 3}), 20);
  EXPECT_EQ(warp_constant(std::int64_t{0}, SubRange{1, 5, 2, 3}), 0);
  EXPECT_DOUBLE_EQ(warp_constant(0.5, SubRange{1, 1, 1, 1}), 0.5);
}

TEST(DtwIdentity, RunningInstance) {
  const auto t = abs_table({0, 1}, {1, 1});
  const WeightedReduction red(t);
  const DtwSequence s = build_dtw_sequence(red);
  EXPECT_EQ(dtw_via_banded_lis(s, {1, 2, 1, 2}), 1);
  EXPECT_EQ(dtw_via_banded_lis(s, {1, 1, 2, 2}), 1);
  EXPECT_EQ(dtw_via_banded_lis(s, {2, 2, 1, 2}), 0);
  EXPECT_EQ(dtw_via_banded_his(red, {1, 2, 1, 2}), 1);
  EXPECT_EQ(dtw_via_banded_his_tight(red, {1, 2, 1, 2}), 1);
}

TEST(DtwIdentity, SingleCellIsTheDissimilarity) {
  std::mt19937_64 rng(23);
  const auto t = DissimilarityTable::from_ints(oracle::random_grid(rng, 4, 3, 5));
  const WeightedReduction red(t);
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 3; ++j) EXPECT_EQ(dtw_via_banded_his(red, {i, i, j, j}), t(i, j));
}

TEST(DtwIdentity, RealValuedDissimilarity) {
  const auto t = build_dissimilarity(TimeSeries({0}), TimeSeries({0.5}), DissimilaritySpec::absolute());
  EXPECT_DOUBLE_EQ(dtw_via_banded_his_real(WeightedReduction(t), {1, 1, 1, 1}), 0.5);

  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 50; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 4);
    RealGrid g(m, n);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = static_cast<double>(rng() % 100) / 16.0;
    const auto rt = DissimilarityTable::from_reals(g);
    const WeightedReduction red(rt);
    for (const auto& r : oracle::all_subranges(m, n)) {
      ASSERT_NEAR(dtw_via_banded_his_real(red, r), dtw_distance(rt.reals(), r), 1e-9);
    }
  }
}

TEST(DtwIdentity, AllSubrangesAgreeWithDp) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto t = DissimilarityTable::from_ints(oracle::random_grid(rng, m, n, 4),
                                                 4 + static_cast<int>(rng() % 3));
    const WeightedReduction red(t);
    const DtwSequence s = build_dtw_sequence(red);
    for (const auto& r : oracle::all_subranges(m, n)) {
      const std::int64_t want = dtw_distance(t, r);
      ASSERT_EQ(dtw_via_banded_lis(s, r), want);
      ASSERT_EQ(dtw_via_banded_his(red, r), want);
      ASSERT_EQ(dtw_via_banded_his_tight(red, r), want);
    }
  }
}
