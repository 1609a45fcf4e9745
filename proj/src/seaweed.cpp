#include "warp_lis/seaweed.hpp"

#include <algorithm>
#include <string>

#include "warp_lis/lis_kernel.hpp"

namespace warp_lis {

namespace {

void check_permutation(std::span<const int> s) {
  std::vector<char> seen(s.size() + 1, 0);
  for (const int v : s) {
    if (v < 1 || v > static_cast<int>(s.size()) || seen[static_cast<std::size_t>(v)]) {
      throw Error(Errc::invalid_argument, "sequence is not a permutation of 1..n");
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
}

// Tracks are numbered 0-based along the input boundary: left edge bottom to
// top, then top edge left to right; outputs along the bottom edge left to
// right, then the right edge bottom to top. For a grid of `rows` x `cols`:
//   row r starts on track rows-1-r and, if it exits right, ends on cols+rows-1-r;
//   column c starts on track rows+c and, if it exits at the bottom, ends on c.
std::vector<int> comb(std::span<const int> s) {
  const int n = static_cast<int>(s.size());
  std::vector<int> horizontal(static_cast<std::size_t>(n));
  std::vector<int> vertical(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) horizontal[r] = n - 1 - r;
  for (int c = 0; c < n; ++c) vertical[c] = n + c;
  for (int r = 0; r < n; ++r) {
    int& h = horizontal[r];
    const int match = s[r];
    for (int c = 0; c < n; ++c) {
      int& v = vertical[c];
      // seaweeds that already crossed, or meet at a match, do not cross
      if (c == match || h > v) std::swap(h, v);
    }
  }
  std::vector<int> pi(static_cast<std::size_t>(2 * n));
  for (int c = 0; c < n; ++c) pi[vertical[c]] = c;
  for (int r = 0; r < n; ++r) pi[horizontal[r]] = 2 * n - 1 - r;
  return pi;
}

// Glues the braids of the two value halves. The left block (values < h) and
// right block (values >= h) each see every row of S; rows without a match in a
// block pass straight through it. The composition only needs a product over
// the n strands that cross from the left block into the right one.
std::vector<int> merge_halves(std::span<const int> pi_lo, std::span<const int> pi_hi,
                              std::span<const char> is_low) {
  const int n = static_cast<int>(is_low.size());
  const int h = static_cast<int>(pi_lo.size() / 2);
  const int g = static_cast<int>(pi_hi.size() / 2);
  std::vector<int> lo_rows;
  std::vector<int> hi_rows;
  lo_rows.reserve(static_cast<std::size_t>(h));
  hi_rows.reserve(static_cast<std::size_t>(g));
  for (int r = 0; r < n; ++r) (is_low[r] ? lo_rows : hi_rows).push_back(r);
  if (static_cast<int>(lo_rows.size()) != h || static_cast<int>(hi_rows.size()) != g) {
    throw Error(Errc::invalid_argument, "steady_ant_merge: split does not match the halves");
  }

  // left block: n rows x h columns, n + h tracks
  std::vector<int> left(static_cast<std::size_t>(n + h));
  for (int t = 0; t < 2 * h; ++t) {
    const int start = t < h ? n - 1 - lo_rows[h - 1 - t] : n + (t - h);
    const int e = pi_lo[t];
    left[start] = e < h ? e : h + n - 1 - lo_rows[2 * h - 1 - e];
  }
  for (const int r : hi_rows) left[n - 1 - r] = h + n - 1 - r;

  // right block: n rows x g columns, n + g tracks
  std::vector<int> right(static_cast<std::size_t>(n + g));
  for (int t = 0; t < 2 * g; ++t) {
    const int start = t < g ? n - 1 - hi_rows[g - 1 - t] : n + (t - g);
    const int e = pi_hi[t];
    right[start] = e < g ? e : g + n - 1 - hi_rows[2 * g - 1 - e];
  }
  for (const int r : lo_rows) right[n - 1 - r] = g + n - 1 - r;

  std::vector<int> pi(static_cast<std::size_t>(2 * n));
  std::vector<int> core_starts;
  std::vector<int> core_p;
  core_starts.reserve(static_cast<std::size_t>(n));
  core_p.reserve(static_cast<std::size_t>(n));
  for (int t = 0; t < n + h; ++t) {
    if (left[t] < h) {
      pi[t] = left[t];
    } else {
      core_starts.push_back(t);
      core_p.push_back(left[t] - h);
    }
  }
  for (int t = n + h; t < 2 * n; ++t) pi[t] = h + right[t - h];

  std::vector<int> rank(static_cast<std::size_t>(n + g), -1);
  for (int j = 0; j < n; ++j) rank[right[j]] = 0;
  std::vector<int> core_cols;
  core_cols.reserve(static_cast<std::size_t>(n));
  for (int e = 0; e < n + g; ++e) {
    if (rank[e] == 0) {
      rank[e] = static_cast<int>(core_cols.size());
      core_cols.push_back(e);
    }
  }
  std::vector<int> core_q(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) core_q[j] = rank[right[j]];

  const auto core_r = sticky_multiply(core_p, core_q);
  for (std::size_t idx = 0; idx < core_starts.size(); ++idx) {
    pi[core_starts[idx]] = h + core_cols[core_r[idx]];
  }
  return pi;
}

std::vector<int> build_dc(std::span<const int> s, int cutoff) {
  const int n = static_cast<int>(s.size());
  if (n <= std::max(cutoff, 1)) return comb(s);
  const int h = (n + 1) / 2;
  std::vector<int> lo;
  std::vector<int> hi;
  std::vector<char> is_low(static_cast<std::size_t>(n));
  lo.reserve(static_cast<std::size_t>(h));
  hi.reserve(static_cast<std::size_t>(n - h));
  for (int r = 0; r < n; ++r) {
    is_low[r] = s[r] < h;
    if (is_low[r]) {
      lo.push_back(s[r]);
    } else {
      hi.push_back(s[r] - h);
    }
  }
  const auto pi_lo = build_dc(lo, cutoff);
  const auto pi_hi = build_dc(hi, cutoff);
  return merge_halves(pi_lo, pi_hi, is_low);
}

std::vector<int> to_zero_based(std::span<const int> s) {
  std::vector<int> out(s.begin(), s.end());
  for (auto& v : out) --v;
  return out;
}

SeaweedPermutation from_zero_based(std::vector<int> pi) {
  SeaweedPermutation sw;
  sw.n = static_cast<int>(pi.size() / 2);
  for (auto& v : pi) ++v;
  sw.pi = std::move(pi);
  return sw;
}

}  // namespace

bool lemma_covers(int n, int k_lo, int k_hi, LemmaCase which) {
  if (k_lo < 1 || k_hi < 1 || k_lo > 2 * n - 1 || k_hi > 2 * n - 1) return false;
  switch (which) {
    case LemmaCase::suffix_low_band: return k_lo <= n && k_hi <= n;
    case LemmaCase::prefix_high_band: return k_lo >= n && k_hi >= n;
    case LemmaCase::whole_band: return k_hi <= n && n <= k_lo && k_lo - n + 1 <= k_hi;
    case LemmaCase::window: return k_lo <= n && n <= k_hi && n - k_lo + 1 <= 2 * n - k_hi;
  }
  return false;
}

std::optional<LemmaCase> classify_pair(int n, int k_lo, int k_hi) {
  for (const auto which : {LemmaCase::suffix_low_band, LemmaCase::prefix_high_band,
                           LemmaCase::whole_band, LemmaCase::window}) {
    if (lemma_covers(n, k_lo, k_hi, which)) return which;
  }
  return std::nullopt;
}

BandedQuery lemma_query(int n, int k_lo, int k_hi, LemmaCase which) {
  if (!lemma_covers(n, k_lo, k_hi, which)) {
    throw Error(Errc::unsupported_pair, "pair outside the requested case");
  }
  switch (which) {
    case LemmaCase::suffix_low_band: return {n - k_lo + 1, n, 1, k_hi};
    case LemmaCase::prefix_high_band: return {1, 2 * n - k_hi, k_lo - n + 1, n};
    case LemmaCase::whole_band: return {1, n, k_lo - n + 1, k_hi};
    case LemmaCase::window: return {n - k_lo + 1, 2 * n - k_hi, 1, n};
  }
  return {};
}

int scan_count(const SeaweedPermutation& sw, int k_lo, int k_hi) {
  int count = 0;
  for (int k = k_lo + 1; k <= sw.size(); ++k) count += sw[k] <= k_hi ? 1 : 0;
  return count;
}

SeaweedPermutation build_seaweed_baseline(std::span<const int> s) {
  check_permutation(s);
  return from_zero_based(comb(to_zero_based(s)));
}

SeaweedPermutation build_seaweed_dc(std::span<const int> s, const SeaweedBuildOptions& options) {
  check_permutation(s);
  return from_zero_based(build_dc(to_zero_based(s), options.cutoff));
}

SeaweedPermutation steady_ant_merge(const SeaweedPermutation& lo, const SeaweedPermutation& hi,
                                    std::span<const char> is_low) {
  std::vector<int> pi_lo = lo.pi;
  std::vector<int> pi_hi = hi.pi;
  for (auto& v : pi_lo) --v;
  for (auto& v : pi_hi) --v;
  return from_zero_based(merge_halves(pi_lo, pi_hi, is_low));
}

SeaweedPermutation seaweed_oracle(std::span<const int> s) {
  check_permutation(s);
  const int n = static_cast<int>(s.size());
  const int size = 2 * n;
  if (n == 0) return {};

  // count table over [0, 2n] x [0, 2n]; -1 marks pairs the identity leaves open
  std::vector<int> count(static_cast<std::size_t>((size + 1) * (size + 1)), -1);
  const auto at = [&](int a, int b) -> int& { return count[static_cast<std::size_t>(a * (size + 1) + b)]; };
  for (int j = 0; j <= size; ++j) {
    at(0, j) = j;
    at(size, j) = 0;
  }
  for (int i = 0; i <= size; ++i) {
    at(i, 0) = 0;
    at(i, size) = size - i;
  }
  for (int k_lo = 1; k_lo < size; ++k_lo) {
    for (int k_hi = 1; k_hi < size; ++k_hi) {
      const auto which = classify_pair(n, k_lo, k_hi);
      if (!which) continue;
      const auto q = lemma_query(n, k_lo, k_hi, *which);
      const int lis = static_cast<int>(banded_lis_length(s, q.pos_first, q.pos_last, q.band_lo, q.band_hi));
      const int base = std::min(k_hi, n) - std::max(0, k_lo - n);
      at(k_lo, k_hi) = base - lis;
    }
  }

  // Row k's difference count(k-1, j) - count(k, j) is the step [Pi[k] <= j].
  std::vector<int> lower(static_cast<std::size_t>(size + 1), 0);
  std::vector<int> upper(static_cast<std::size_t>(size + 1), size);
  for (int k = 1; k <= size; ++k) {
    for (int j = 0; j <= size; ++j) {
      const int before = at(k - 1, j);
      const int after = at(k, j);
      if (before < 0 || after < 0) continue;
      const int step = before - after;
      if (step == 0) {
        lower[k] = std::max(lower[k], j);
      } else if (step == 1) {
        upper[k] = std::min(upper[k], j);
      } else {
        throw Error(Errc::oracle_inconsistency, "count difference outside {0, 1}");
      }
    }
    if (lower[k] >= upper[k]) throw Error(Errc::oracle_inconsistency, "non-monotone count row");
  }

  // Pi[k] lies in (lower[k], upper[k]]; settle rows with a single free value.
  std::vector<int> pi(static_cast<std::size_t>(size), 0);
  std::vector<char> used(static_cast<std::size_t>(size + 1), 0);
  int assigned = 0;
  bool progress = true;
  while (assigned < size && progress) {
    progress = false;
    for (int k = 1; k <= size; ++k) {
      if (pi[k - 1] != 0) continue;
      int candidate = 0;
      int options = 0;
      for (int v = lower[k] + 1; v <= upper[k]; ++v) {
        if (!used[v]) {
          candidate = v;
          ++options;
        }
      }
      if (options == 0) throw Error(Errc::oracle_inconsistency, "no value left for row " + std::to_string(k));
      if (options == 1) {
        pi[k - 1] = candidate;
        used[candidate] = 1;
        ++assigned;
        progress = true;
      }
    }
  }
  if (assigned < size) throw Error(Errc::oracle_inconsistency, "ambiguous reconstruction");

  SeaweedPermutation sw{n, std::move(pi)};
  for (int k_lo = 1; k_lo < size; ++k_lo) {
    for (int k_hi = 1; k_hi < size; ++k_hi) {
      if (at(k_lo, k_hi) >= 0 && scan_count(sw, k_lo, k_hi) != at(k_lo, k_hi)) {
        throw Error(Errc::oracle_inconsistency, "round trip failed");
      }
    }
  }
  return sw;
}

}  // namespace warp_lis
