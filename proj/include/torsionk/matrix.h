#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace torsionk {

using Integer = boost::multiprecision::cpp_int;

/// Representative of `a` modulo `m` in [0, m). Requires m > 0.
Integer mod(const Integer& a, const Integer& m);
Integer gcd(const Integer& a, const Integer& b);
std::int64_t to_int64(const Integer& a);

/// Dense integer matrix, row-major, arbitrary precision entries.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::size_t rows, std::size_t cols, std::span<const Integer> diag);
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Integer> column(std::size_t c) const;
  std::vector<Integer> row(std::size_t r) const;
  IntMatrix select_columns(std::span<const std::size_t> cols) const;

  IntMatrix transpose() const;
  IntMatrix hcat(const IntMatrix& right) const;
  IntMatrix reduced(const Integer& modulus) const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  std::vector<Integer> apply(std::span<const Integer> x) const;

  bool is_zero() const;
  bool is_diagonal() const;

  /// Exact determinant by fraction-free (Bareiss) elimination. Square only.
  Integer determinant() const;

  bool operator==(const IntMatrix& other) const = default;

  std::string to_string() const;

  // Elementary operations used by the Smith reduction.
  void swap_rows(std::size_t i, std::size_t j);
  void swap_cols(std::size_t i, std::size_t j);
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

}  // namespace torsionk
