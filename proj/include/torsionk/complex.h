#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "torsionk/matrix.h"

namespace torsionk {

struct OneCell {
  std::string name;
  std::string source;
  std::string target;
};

/// One step of an attaching word: traverse `cell` `exponent` times (negative = backwards).
struct WordLetter {
  std::string cell;
  std::int64_t exponent = 1;

  bool operator==(const WordLetter&) const = default;
};

struct TwoCell {
  std::string name;
  std::vector<WordLetter> word;
};

/// Connected 2-dimensional CW complex described combinatorially: 2-cells are
/// attached along closed edge loops of the 1-skeleton.
class CW2Complex {
 public:
  /// Validates names, endpoints, loop closure and connectivity; throws
  /// std::invalid_argument on the first violation.
  CW2Complex(std::vector<std::string> zero_cells, std::vector<OneCell> one_cells, std::vector<TwoCell> two_cells);

  const std::vector<std::string>& zero_cells() const { return zero_cells_; }
  const std::vector<OneCell>& one_cells() const { return one_cells_; }
  const std::vector<TwoCell>& two_cells() const { return two_cells_; }

  /// Number of cells in dimension 0, 1 or 2.
  std::size_t count(int dim) const;

  std::optional<std::size_t> zero_cell_index(const std::string& name) const;
  std::optional<std::size_t> one_cell_index(const std::string& name) const;
  std::optional<std::size_t> two_cell_index(const std::string& name) const;

  std::int64_t euler_characteristic() const;

 private:
  std::vector<std::string> zero_cells_;
  std::vector<OneCell> one_cells_;
  std::vector<TwoCell> two_cells_;
};

/// Cellular chain complex C2 -> C1 -> C0 over Z.
struct ChainData {
  IntMatrix d1;  // |C0| x |C1|: target - source
  IntMatrix d2;  // |C1| x |C2|: exponent sums of attaching words
};

ChainData chain_data(const CW2Complex& x);

/// Cochain differentials delta^0 = d1^T and delta^1 = d2^T.
IntMatrix coboundary(const CW2Complex& x, int degree);

namespace standard_complexes {

/// One 0-cell, 1-cells x and z, 2-cell x z x^-1 z^-1.
CW2Complex torus();
/// One 0-cell, one 2-cell with the empty word.
CW2Complex sphere();
/// One 0-cell and `circles` loops, no 2-cells.
CW2Complex wedge_of_circles(std::size_t circles);
/// One 0-cell, one loop a, 2-cell a^2.
CW2Complex projective_plane();
/// One 0-cell, loops a and b, 2-cell a b a^-1 b.
CW2Complex klein_bottle();
/// One 0-cell, no higher cells.
CW2Complex point();

}  // namespace standard_complexes

}  // namespace torsionk
