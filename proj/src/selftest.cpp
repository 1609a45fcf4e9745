#include "warp_lis/selftest.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "warp_lis/dtw_dp.hpp"
#include "warp_lis/range_index.hpp"
#include "warp_lis/reduction.hpp"
#include "warp_lis/semilocal_index.hpp"
#include "warp_lis/solvers.hpp"

namespace warp_lis {
namespace {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

TimeSeries random_series(Rng& rng, int len) {
  std::vector<double> v(static_cast<std::size_t>(len));
  for (auto& x : v) x = uniform(rng, 0, 3);
  return TimeSeries(std::move(v));
}

struct Instance {
  TimeSeries a, b;
  DissimilaritySpec spec;
};

Instance random_instance(Rng& rng, int max_len) {
  TimeSeries a = random_series(rng, uniform(rng, 1, max_len));
  TimeSeries b = random_series(rng, uniform(rng, 1, max_len));
  auto spec = uniform(rng, 0, 1) == 0 ? DissimilaritySpec::absolute() : DissimilaritySpec::squared();
  return {std::move(a), std::move(b), std::move(spec)};
}

DissimilarityTable random_table(Rng& rng, int max_len) {
  const Instance x = random_instance(rng, max_len);
  return build_dissimilarity(x.a, x.b, x.spec);
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Runs `check` once per trial; a nonempty return value is a failure message.
SuiteReport run_suite(const std::string& name, int trials, Rng& rng,
                      const std::function<std::string(Rng&)>& check) {
  SuiteReport r{name, trials, 0, {}};
  for (int t = 0; t < trials; ++t) {
    std::string why;
    try {
      why = check(rng);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (!why.empty()) {
      if (r.failures++ == 0) r.first_failure = "trial " + std::to_string(t) + ": " + why;
    }
  }
  return r;
}

std::string reduction_trial(Rng& rng, int max_len) {
  const DissimilarityTable t = random_table(rng, max_len);
  const WeightedReduction red(t);
  const DtwSequence seq = build_dtw_sequence(red);
  for (int q = 0; q < 16; ++q) {
    SubRange r;
    r.i_first = uniform(rng, 1, t.rows());
    r.i_last = uniform(rng, r.i_first, t.rows());
    r.j_first = uniform(rng, 1, t.cols());
    r.j_last = uniform(rng, r.j_first, t.cols());
    const std::int64_t want = dtw_distance(t, r);
    if (dtw_via_banded_lis(seq, r) != want || dtw_via_banded_his(red, r) != want) {
      return "banded LIS/HIS disagrees with the dynamic program";
    }
  }
  return {};
}

std::string seaweed_trial(Rng& rng, int max_len) {
  const auto s = random_permutation(rng, uniform(rng, 0, 4 * max_len));
  const SeaweedPermutation base = build_seaweed_baseline(s);
  if (!(build_seaweed_dc(s, SeaweedBuildOptions{1}) == base)) return "divide and conquer differs from combing";
  if (s.size() <= 32 && !(seaweed_oracle(s) == base)) return "oracle differs from combing";
  return {};
}

std::string range_trial(Rng& rng, int max_len) {
  SeaweedPermutation sw;
  sw.n = uniform(rng, 0, 4 * max_len);
  sw.pi = random_permutation(rng, 2 * sw.n);
  const RangeCountIndex rc(sw);
  for (int lo = 0; lo <= sw.size(); ++lo)
    for (int hi = 0; hi <= sw.size(); ++hi)
      if (rc.count(lo, hi) != scan_count(sw, lo, hi)) return "count differs from a linear scan";
  return {};
}

std::string semilocal_trial(Rng& rng, int max_len) {
  const DissimilarityTable t = random_table(rng, max_len);
  const SemiLocalDtwIndex index = build_index(t);
  const SemilocalTables want = dtw_all_semilocal_naive(t);
  const int m = t.rows();
  const int n = t.cols();
  for (int i1 = 1; i1 <= m; ++i1)
    for (int i2 = i1; i2 <= m; ++i2)
      if (index.distance(SubstringVsWholeB{i1, i2}) != want.substring_a(i1 - 1, i2 - 1)) return "A-substring query";
  for (int j1 = 1; j1 <= n; ++j1)
    for (int j2 = j1; j2 <= n; ++j2)
      if (index.distance(WholeAVsSubstring{j1, j2}) != want.substring_b(j1 - 1, j2 - 1)) return "B-substring query";
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (index.distance(PrefixAVsSuffixB{i, j}) != want.prefix_a_suffix_b(i - 1, j - 1)) return "prefix-suffix query";
      if (index.distance(SuffixAVsPrefixB{i, j}) != want.suffix_a_prefix_b(i - 1, j - 1)) return "suffix-prefix query";
    }
  }
  return {};
}

std::string solver_trial(Rng& rng, int max_len) {
  const Instance x = random_instance(rng, max_len);
  const DissimilarityTable t = build_dissimilarity(x.a, x.b, x.spec);
  if (!(circular_dtw(t) == circular_dtw_naive(t))) return "circular";
  const DissimilarityTable self = build_dissimilarity(x.a, x.a, x.spec);
  if (self.rows() >= 2 && !(sqrt_dtw(self) == sqrt_dtw_naive(self))) return "sqrt";
  const PeriodicResult fast = periodic_dtw(t);
  if (!(fast == periodic_dtw_naive(t))) return "periodic";
  if (periodic_objective(t, fast) != fast.cost) return "periodic witness";
  return {};
}

}  // namespace

SelftestReport run_selftest(const SelftestOptions& options) {
  const int len = std::max(1, options.max_len);
  const int trials = std::max(0, options.trials);
  SelftestReport report;
  std::uint64_t salt = 0;
  const auto add = [&](const std::string& name, std::string (*trial)(Rng&, int)) {
    Rng rng(options.seed * 0x9E3779B97F4A7C15ULL + ++salt);
    report.suites.push_back(run_suite(name, trials, rng, [&](Rng& r) { return trial(r, len); }));
    report.passed = report.passed && report.suites.back().failures == 0;
  };
  add("reduction", reduction_trial);
  add("seaweed", seaweed_trial);
  add("range-index", range_trial);
  add("semilocal", semilocal_trial);
  add("solvers", solver_trial);
  return report;
}

}  // namespace warp_lis
