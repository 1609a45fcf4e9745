#include "warp_lis/reduction.hpp"

#include <limits>

#include "warp_lis/lis_kernel.hpp"

namespace warp_lis {

WeightedReduction::WeightedReduction(const DissimilarityTable& table)
    : m_(table.rows()), n_(table.cols()), c_(table.cap()), real_c_(table.real_cap()) {
  const std::int64_t length =
      static_cast<std::int64_t>(m_) * n_ + static_cast<std::int64_t>(m_ - 1) * (n_ - 1);
  if (length > std::numeric_limits<int>::max()) {
    throw Error(Errc::invalid_argument, "series too long for the weighted reduction");
  }
  values_.assign(static_cast<std::size_t>(length), 0);
  weights_.assign(values_.size(), 0);
  real_weights_.assign(values_.size(), 0.0);
  coords_.assign(values_.size(), {});

  for (int i = 1; i <= m_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      const auto at = static_cast<std::size_t>(position_of_cell(i, j) - 1);
      values_[at] = static_cast<int>(value_of_cell(i, j));
      weights_[at] = c_ - table(i, j);
      real_weights_[at] = real_c_ - table.real(i, j);
      coords_[at] = {i, j, false};
      if (i >= 2 && j >= 2) {
        const auto corner = static_cast<std::size_t>(position_of_corner(i, j) - 1);
        values_[corner] = static_cast<int>(value_of_corner(i, j));
        weights_[corner] = c_;
        real_weights_[corner] = real_c_;
        coords_[corner] = {i, j, true};
      }
    }
  }
}

DtwSequence build_dtw_sequence(const WeightedReduction& red) {
  const auto length = static_cast<std::size_t>(red.length());
  DtwSequence s;
  s.rows = red.rows();
  s.cols = red.cols();
  s.cap = red.cap();

  std::int64_t total = 0;
  for (const auto w : red.weights()) total += w;
  if (total > std::numeric_limits<int>::max()) {
    throw Error(Errc::invalid_argument, "DTW distance sequence too long");
  }

  // position of each value, to accumulate weights in value order
  std::vector<std::size_t> position_of_value(length + 1);
  for (std::size_t f = 0; f < length; ++f) {
    position_of_value[static_cast<std::size_t>(red.values()[f])] = f;
  }
  s.run_low_value.resize(length);
  s.run_high_value.resize(length);
  std::int64_t acc = 0;
  for (std::size_t v = 1; v <= length; ++v) {
    const std::size_t f = position_of_value[v];
    acc += red.weights()[f];
    s.run_high_value[f] = static_cast<int>(acc);
    s.run_low_value[f] = static_cast<int>(acc - red.weights()[f] + 1);
  }

  s.run_first_pos.resize(length);
  s.run_last_pos.resize(length);
  s.seq.reserve(static_cast<std::size_t>(total));
  acc = 0;
  for (std::size_t f = 0; f < length; ++f) {
    const auto w = red.weights()[f];
    acc += w;
    s.run_last_pos[f] = static_cast<int>(acc);
    s.run_first_pos[f] = static_cast<int>(acc - w + 1);
    for (int v = s.run_low_value[f]; v <= s.run_high_value[f]; ++v) s.seq.push_back(v);
  }

  const int m = s.rows;
  const int n = s.cols;
  s.row_first_pos.resize(static_cast<std::size_t>(m));
  s.row_last_pos.resize(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    s.row_first_pos[i - 1] = s.run_first_pos[static_cast<std::size_t>(red.position_of_cell(i, 1) - 1)];
    s.row_last_pos[i - 1] = s.run_last_pos[static_cast<std::size_t>(red.position_of_cell(i, n) - 1)];
  }
  s.col_low_value.resize(static_cast<std::size_t>(n));
  s.col_high_value.resize(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) {
    s.col_low_value[j - 1] = s.run_low_value[static_cast<std::size_t>(red.position_of_cell(1, j) - 1)];
    s.col_high_value[j - 1] = s.run_high_value[static_cast<std::size_t>(red.position_of_cell(m, j) - 1)];
  }
  return s;
}

std::int64_t warp_constant(std::int64_t c, const SubRange& r) {
  return c * ((r.i_last - r.i_first) + (r.j_last - r.j_first) + 1);
}

double warp_constant(double c, const SubRange& r) {
  return c * ((r.i_last - r.i_first) + (r.j_last - r.j_first) + 1);
}

std::int64_t dtw_via_banded_lis(const DtwSequence& s, const SubRange& r) {
  check_subrange(r, s.rows, s.cols);
  const auto lis = banded_lis_length(s.seq, s.row_first_pos[r.i_first - 1], s.row_last_pos[r.i_last - 1],
                                     s.col_low_value[r.j_first - 1], s.col_high_value[r.j_last - 1]);
  return warp_constant(s.cap, r) - static_cast<std::int64_t>(lis);
}

std::int64_t dtw_via_banded_his(const WeightedReduction& red, const SubRange& r) {
  check_subrange(r, red.rows(), red.cols());
  const auto his = banded_his_weight(red.values(), red.weights(), red.position_of_cell(r.i_first, 1),
                                     red.position_of_cell(r.i_last, red.cols()),
                                     red.value_of_cell(1, r.j_first),
                                     red.value_of_cell(red.rows(), r.j_last));
  return warp_constant(red.cap(), r) - his;
}

double dtw_via_banded_his_real(const WeightedReduction& red, const SubRange& r) {
  check_subrange(r, red.rows(), red.cols());
  const auto his = banded_his_weight(red.values(), red.real_weights(),
                                     red.position_of_cell(r.i_first, 1),
                                     red.position_of_cell(r.i_last, red.cols()),
                                     red.value_of_cell(1, r.j_first),
                                     red.value_of_cell(red.rows(), r.j_last));
  return warp_constant(red.real_cap(), r) - his;
}

std::int64_t dtw_via_banded_his_tight(const WeightedReduction& red, const SubRange& r) {
  check_subrange(r, red.rows(), red.cols());
  const auto his = banded_his_weight(red.values(), red.weights(),
                                     red.position_of_cell(r.i_first, r.j_first),
                                     red.position_of_cell(r.i_last, r.j_last),
                                     red.value_of_cell(r.i_first, r.j_first),
                                     red.value_of_cell(r.i_last, r.j_last));
  return warp_constant(red.cap(), r) - his;
}

}  // namespace warp_lis
