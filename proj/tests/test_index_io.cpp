#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "warp_lis/index_io.hpp"

using namespace warp_lis;

TEST(IndexIo, RoundTrip) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const int m = 1 + static_cast<int>(rng() % 6);
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto t = DissimilarityTable::from_ints(oracle::random_grid(rng, m, n, 3));
    const auto index = build_index(t);
    std::stringstream buf;
    save_index(index, buf);
    const auto loaded = load_index(buf);
    EXPECT_EQ(loaded.width(), index.width());
    EXPECT_EQ(loaded.cap(), index.cap());
    EXPECT_EQ(loaded.permutation(), index.permutation());
    for (int i1 = 1; i1 <= m; ++i1)
      for (int j = 1; j <= n; ++j) {
        EXPECT_EQ(loaded.distance(SuffixAVsPrefixB{i1, j}), index.distance(SuffixAVsPrefixB{i1, j}));
        EXPECT_EQ(loaded.query(PrefixAVsSuffixB{i1, j}).fallback, index.query(PrefixAVsSuffixB{i1, j}).fallback);
      }
  }
}

TEST(IndexIo, RejectsBadDocuments) {
  const auto code = [](const std::string& text) {
    try {
      index_from_json(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::invalid_argument;
  };
  EXPECT_EQ(code("not json"), Errc::io_error);
  EXPECT_EQ(code(R"({"format":"other","version":1})"), Errc::io_error);
  EXPECT_EQ(code(R"({"format":"warp-lis-index","version":99})"), Errc::io_error);
  const std::string good = index_to_json(build_index(TimeSeries({0, 1}), TimeSeries({1, 1}), DissimilaritySpec::absolute()));
  EXPECT_NO_THROW(index_from_json(good));
  std::string bad_perm = good;
  bad_perm.replace(bad_perm.find("\"S\":[2,1,3]"), 11, "\"S\":[2,2,3]");
  EXPECT_EQ(code(bad_perm), Errc::invariant_violation);
}
