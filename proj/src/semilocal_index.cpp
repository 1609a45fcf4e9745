#include "warp_lis/semilocal_index.hpp"

#include <string>
#include <utility>

#include "warp_lis/lis_kernel.hpp"

namespace warp_lis {
namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

int at1(const std::vector<int>& v, int i) { return v[static_cast<std::size_t>(i - 1)]; }

}  // namespace

SubRange implied_range(const QueryShape& shape, int m, int n) {
  const SubRange r = std::visit(
      Overloaded{
          [&](const SubstringVsWholeB& q) { return SubRange{q.i_first, q.i_last, 1, n}; },
          [&](const WholeAVsSubstring& q) { return SubRange{1, m, q.j_first, q.j_last}; },
          [&](const PrefixAVsSuffixB& q) { return SubRange{1, q.i_last, q.j_first, n}; },
          [&](const SuffixAVsPrefixB& q) { return SubRange{q.i_first, m, 1, q.j_last}; },
      },
      shape);
  check_subrange(r, m, n);
  return r;
}

QueryShape shape_of(const SubRange& r, int m, int n) {
  check_subrange(r, m, n);
  if (r.j_first == 1 && r.j_last == n) return SubstringVsWholeB{r.i_first, r.i_last};
  if (r.i_first == 1 && r.i_last == m) return WholeAVsSubstring{r.j_first, r.j_last};
  if (r.i_first == 1 && r.j_last == n) return PrefixAVsSuffixB{r.i_last, r.j_first};
  if (r.i_last == m && r.j_first == 1) return SuffixAVsPrefixB{r.i_first, r.j_last};
  throw Error(Errc::unsupported_query,
              "substring-vs-substring queries are not served by the index; use dtw_distance");
}

LemmaParams map_query_to_lemma_params(const QueryShape& shape, const DtwSequence& seq) {
  const int w = seq.size();
  LemmaParams p = std::visit(
      Overloaded{
          [&](const SubstringVsWholeB& q) {
            return LemmaParams{w - at1(seq.row_first_pos, q.i_first) + 1,
                               2 * w - at1(seq.row_last_pos, q.i_last), LemmaCase::window, false};
          },
          [&](const WholeAVsSubstring& q) {
            return LemmaParams{at1(seq.col_low_value, q.j_first) + w - 1,
                               at1(seq.col_high_value, q.j_last), LemmaCase::whole_band, false};
          },
          [&](const PrefixAVsSuffixB& q) {
            return LemmaParams{at1(seq.col_low_value, q.j_first) + w - 1,
                               2 * w - at1(seq.row_last_pos, q.i_last), LemmaCase::prefix_high_band,
                               false};
          },
          [&](const SuffixAVsPrefixB& q) {
            return LemmaParams{w - at1(seq.row_first_pos, q.i_first) + 1,
                               at1(seq.col_high_value, q.j_last), LemmaCase::suffix_low_band, false};
          },
      },
      shape);
  p.covered = lemma_covers(w, p.k_lo, p.k_hi, p.expected);
  return p;
}

SemiLocalDtwIndex::SemiLocalDtwIndex(DtwSequence seq, SeaweedPermutation sw)
    : seq_(std::move(seq)), sw_(std::move(sw)), rc_(sw_) {
  const int w = seq_.size();
  const auto sized = [](const std::vector<int>& v, int len) {
    return static_cast<int>(v.size()) == len;
  };
  if (seq_.rows < 1 || seq_.cols < 1 || !sized(seq_.row_first_pos, seq_.rows) ||
      !sized(seq_.row_last_pos, seq_.rows) || !sized(seq_.col_low_value, seq_.cols) ||
      !sized(seq_.col_high_value, seq_.cols)) {
    throw Error(Errc::invariant_violation, "sequence lookup arrays do not match the grid shape");
  }
  if (sw_.n != w) {
    throw Error(Errc::invariant_violation, "seaweed permutation size does not match the sequence");
  }
  if (w > 0 && (seq_.col_low_value.front() != 1 || seq_.col_high_value.back() != w ||
                seq_.row_last_pos.back() != w)) {
    throw Error(Errc::invariant_violation, "boundary identities H(1) = 1, H(n) = G(m) = W fail");
  }
}

QueryResult SemiLocalDtwIndex::query(const QueryShape& shape) const {
  const SubRange r = implied_range(shape, rows(), cols());
  const std::int64_t k = warp_constant(cap(), r);
  const int w = width();
  if (w == 0) return {k, false};
  const LemmaParams p = map_query_to_lemma_params(shape, seq_);
  if (p.covered) {
    const int lis = semilocal_lis_value(sw_, rc_, p.k_lo, p.k_hi);
    return {k - lis, false};
  }
  const auto lis = banded_lis_length(seq_.seq, at1(seq_.row_first_pos, r.i_first),
                                     at1(seq_.row_last_pos, r.i_last),
                                     at1(seq_.col_low_value, r.j_first),
                                     at1(seq_.col_high_value, r.j_last));
  return {k - static_cast<std::int64_t>(lis), true};
}

SemiLocalDtwIndex build_index(const DissimilarityTable& table, const SeaweedBuildOptions& options) {
  DtwSequence seq = build_dtw_sequence(WeightedReduction(table));
  SeaweedPermutation sw = build_seaweed_dc(seq.seq, options);
  return SemiLocalDtwIndex(std::move(seq), std::move(sw));
}

SemiLocalDtwIndex build_index(const TimeSeries& a, const TimeSeries& b, const DissimilaritySpec& spec,
                              const SeaweedBuildOptions& options) {
  return build_index(build_dissimilarity(a, b, spec), options);
}

}  // namespace warp_lis
