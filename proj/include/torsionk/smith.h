#pragma once

#include <cstddef>
#include <vector>

#include "torsionk/matrix.h"

namespace torsionk {

/// Smith normal form of an integer matrix A (r x c).
///
/// `a == u * s * v` holds exactly, with `u` (r x r) and `v` (c x c) unimodular
/// and `s` diagonal with nonnegative entries s_0 | s_1 | ... and zeros last.
/// The inverses are tracked alongside, so `s == u_inv * a * v_inv` as well.
struct SmithDecomposition {
  IntMatrix u;
  IntMatrix s;
  IntMatrix v;
  IntMatrix u_inv;
  IntMatrix v_inv;
  std::size_t rank = 0;

  /// The min(r, c) diagonal entries of `s`.
  std::vector<Integer> diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

}  // namespace torsionk
