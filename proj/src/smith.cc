#include "torsionk/smith.h"

#include <algorithm>
#include <optional>
#include <tuple>
#include <utility>

namespace torsionk {
namespace {

// Keeps u * cur * v == input and u_inv * input * v_inv == cur through every
// elementary operation applied to `cur`.
class Reducer {
 public:
  explicit Reducer(const IntMatrix& a)
      : cur(a),
        u(IntMatrix::identity(a.rows())),
        u_inv(IntMatrix::identity(a.rows())),
        v(IntMatrix::identity(a.cols())),
        v_inv(IntMatrix::identity(a.cols())) {}

  // row_dst += factor * row_src
  void add_row(std::size_t dst, std::size_t src, const Integer& factor) {
    cur.add_row_multiple(dst, src, factor);
    u_inv.add_row_multiple(dst, src, factor);
    u.add_col_multiple(src, dst, -factor);
  }

  // col_dst += factor * col_src
  void add_col(std::size_t dst, std::size_t src, const Integer& factor) {
    cur.add_col_multiple(dst, src, factor);
    v_inv.add_col_multiple(dst, src, factor);
    v.add_row_multiple(src, dst, -factor);
  }

  void swap_rows(std::size_t i, std::size_t j) {
    cur.swap_rows(i, j);
    u_inv.swap_rows(i, j);
    u.swap_cols(i, j);
  }

  void swap_cols(std::size_t i, std::size_t j) {
    cur.swap_cols(i, j);
    v_inv.swap_cols(i, j);
    v.swap_rows(i, j);
  }

  void negate_row(std::size_t i) {
    cur.negate_row(i);
    u_inv.negate_row(i);
    u.negate_col(i);
  }

  IntMatrix cur, u, u_inv, v, v_inv;
};

std::optional<std::pair<std::size_t, std::size_t>> min_abs_entry(const IntMatrix& m, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < m.rows(); ++i) {
    for (std::size_t j = t; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      Integer a = abs(m(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
        if (a == 1) return best;
      }
    }
  }
  return best;
}

}  // namespace

std::vector<Integer> SmithDecomposition::diagonal() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(s.rows(), s.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(s(i, i));
  return out;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  Reducer red(a);
  IntMatrix& m = red.cur;
  const std::size_t limit = std::min(a.rows(), a.cols());
  std::size_t rank = 0;

  for (std::size_t t = 0; t < limit; ++t) {
    const auto first = min_abs_entry(m, t);
    if (!first) break;
    auto [pivot_row, pivot_col] = *first;
    while (true) {
      red.swap_rows(t, pivot_row);
      red.swap_cols(t, pivot_col);

      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (m(i, t) == 0) continue;
        red.add_row(i, t, -(m(i, t) / m(t, t)));
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (m(t, j) == 0) continue;
        red.add_col(j, t, -(m(t, j) / m(t, t)));
        if (m(t, j) != 0) clean = false;
      }

      if (clean) {
        // Pivot must divide every remaining entry; otherwise fold the
        // offending row into row t and keep reducing.
        std::optional<std::size_t> bad_row;
        for (std::size_t i = t + 1; i < m.rows() && !bad_row; ++i) {
          for (std::size_t j = t + 1; j < m.cols(); ++j) {
            if (m(i, j) % m(t, t) != 0) {
              bad_row = i;
              break;
            }
          }
        }
        if (!bad_row) break;
        red.add_row(t, *bad_row, 1);
      }
      // m(t, t) is nonzero, so a pivot always exists here.
      std::tie(pivot_row, pivot_col) = *min_abs_entry(m, t);
    }
    if (m(t, t) < 0) red.negate_row(t);
    ++rank;
  }

  SmithDecomposition out;
  out.s = std::move(red.cur);
  out.u = std::move(red.u);
  out.v = std::move(red.v);
  out.u_inv = std::move(red.u_inv);
  out.v_inv = std::move(red.v_inv);
  out.rank = rank;
  return out;
}

}  // namespace torsionk
