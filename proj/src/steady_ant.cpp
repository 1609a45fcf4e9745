#include <cassert>
#include <vector>

#include "warp_lis/seaweed.hpp"

namespace warp_lis {

namespace {

// Stack allocator for the recursion; frames are released in LIFO order.
class Arena {
 public:
  explicit Arena(std::size_t capacity) : buf_(capacity) {}

  int* take(std::size_t count) {
    assert(top_ + count <= buf_.size());
    int* out = buf_.data() + top_;
    top_ += count;
    return out;
  }
  std::size_t mark() const noexcept { return top_; }
  void release(std::size_t mark) noexcept { top_ = mark; }

 private:
  std::vector<int> buf_;
  std::size_t top_ = 0;
};

constexpr int kBase = 64;

std::size_t frame_ints(int n) { return 7 * static_cast<std::size_t>(n); }

std::size_t arena_need(int n) {
  std::size_t total = 0;
  while (n > kBase) {
    total += frame_ints(n);
    n -= n / 2;
  }
  return total;
}

// Small products in the 0-Hecke monoid: write Q as a reduced word of adjacent
// transpositions and apply each one to P only if it adds an inversion.
void multiply_small(const int* p, const int* q, int* r, int n) {
  int pos[kBase];
  int word[kBase * (kBase - 1) / 2];
  int length = 0;
  for (int j = 0; j < n; ++j) pos[q[j]] = j;
  // insertion sort; every swap removes one inversion, so the word is reduced
  for (int k = 1; k < n; ++k) {
    for (int a = k - 1; a >= 0 && pos[a] > pos[a + 1]; --a) {
      std::swap(pos[a], pos[a + 1]);
      word[length++] = a;
    }
  }
  int row_of[kBase];
  for (int i = 0; i < n; ++i) row_of[p[i]] = i;
  while (length > 0) {
    const int a = word[--length];
    const int x = row_of[a];
    const int y = row_of[a + 1];
    if (x < y) {
      row_of[a] = y;
      row_of[a + 1] = x;
    }
  }
  for (int v = 0; v < n; ++v) r[row_of[v]] = v;
}

// R = P (.) Q. Splits the middle index into [0, h) and [h, n), multiplies the
// two halves recursively, then walks the boundary between the regions where
// each half attains the minimum.
void multiply(const int* p, const int* q, int* r, int n, Arena& arena) {
  if (n <= kBase) {
    multiply_small(p, q, r, n);
    return;
  }
  const int h = n / 2;
  const std::size_t mark = arena.mark();
  int* q_inv = arena.take(n);
  int* col_rank = arena.take(n);
  int* sub_rows = arena.take(n);  // [0, h): rows routed through the low half
  int* sub_cols = arena.take(n);
  int* sub_p = arena.take(n);
  int* sub_q = arena.take(n);
  int* sub_r = arena.take(n);

  for (int j = 0; j < n; ++j) q_inv[q[j]] = j;
  int nl = 0;
  int nh = 0;
  for (int k = 0; k < n; ++k) {
    if (q_inv[k] < h) {
      col_rank[k] = nl;
      sub_cols[nl++] = k;
    } else {
      col_rank[k] = nh;
      sub_cols[h + nh++] = k;
    }
  }
  nl = 0;
  nh = 0;
  for (int i = 0; i < n; ++i) {
    if (p[i] < h) {
      sub_rows[nl] = i;
      sub_p[nl++] = p[i];
    } else {
      sub_rows[h + nh] = i;
      sub_p[h + nh++] = p[i] - h;
    }
  }
  for (int j = 0; j < n; ++j) sub_q[j] = col_rank[q[j]];

  multiply(sub_p, sub_q, sub_r, h, arena);
  multiply(sub_p + h, sub_q + h, sub_r + h, n - h, arena);

  // Nonzeros of both half-products in original coordinates; the low bit tags
  // entries of the high half.
  int* const col_of_row = col_rank;
  int* const row_of_col = q_inv;
  for (int t = 0; t < n; ++t) {
    const int high = t < h ? 0 : 1;
    const int i = sub_rows[t];
    const int k = sub_cols[high * h + sub_r[t]];
    col_of_row[i] = k << 1 | high;
    row_of_col[k] = i << 1 | high;
  }

  // delta(i, k) = (high-half candidate) - (low-half candidate); it is
  // nonincreasing in i and k and changes by at most one per unit step.
  const auto right_step = [&](int i, int k) {
    const int entry = row_of_col[k];
    const int below = (entry >> 1) >= i ? 1 : 0;
    return (entry & 1) ? below - 1 : -below;
  };
  const auto up_step = [&](int i, int k) {
    const int entry = col_of_row[i - 1];
    return (entry & 1) ? ((entry >> 1) < k ? 1 : 0) : ((entry >> 1) >= k ? 1 : 0);
  };

  // Two walks from the bottom-left corner: (lo_i, lo_delta) tracks the last
  // row with delta >= 0, (hi_i, hi_delta) the first row with delta <= 0.
  int lo_i = n;
  int lo_delta = 0;
  int hi_i = n;
  int hi_delta = 0;
  const auto settle_hi = [&](int k) {
    while (hi_i > 0) {
      const int moved = hi_delta + up_step(hi_i, k);
      if (moved > 0) break;
      hi_delta = moved;
      --hi_i;
    }
  };
  settle_hi(0);
  for (int k = 0; k < n; ++k) {
    const int hi_here = hi_i;  // delta(i, k) <= 0 iff i >= hi_here

    lo_delta += right_step(lo_i, k);
    while (lo_delta < 0) {
      lo_delta += up_step(lo_i, k + 1);
      --lo_i;
    }
    const int lo_next = lo_i + 1;  // delta(i, k + 1) >= 0 iff i < lo_next

    const int entry = row_of_col[k];
    const int row = entry >> 1;
    if ((entry & 1) ? row >= hi_here : row + 1 < lo_next) r[row] = k;
    // a cell straddling the boundary gains a nonzero
    const int straddle = lo_next - 1;
    if (straddle >= 0 && straddle < n && straddle < hi_here) r[straddle] = k;

    hi_delta += right_step(hi_i, k);
    settle_hi(k + 1);
  }
  arena.release(mark);
}

}  // namespace

std::vector<int> sticky_multiply(std::span<const int> p, std::span<const int> q) {
  if (p.size() != q.size()) {
    throw Error(Errc::invalid_argument, "sticky_multiply: permutations differ in size");
  }
  const int n = static_cast<int>(p.size());
  std::vector<int> r(p.size());
  if (n == 0) return r;
  Arena arena(arena_need(n));
  multiply(p.data(), q.data(), r.data(), n, arena);
  return r;
}

}  // namespace warp_lis
