#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "checked.hpp"

namespace coincalc {

// Dense row-major integer matrix. Shapes with zero rows or zero columns are
// valid and represent maps to or from the zero module.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(std::initializer_list<std::initializer_list<Int>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Int> entries);
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Int>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Int operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Int> column(std::size_t j) const;
  std::vector<Int> row(std::size_t i) const;
  bool is_zero() const;

  Matrix transposed() const;
  // Columns [first, first+count).
  Matrix column_block(std::size_t first, std::size_t count) const;
  Matrix row_block(std::size_t first, std::size_t count) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, Int factor);
  void add_col_multiple(std::size_t target, std::size_t source, Int factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
std::vector<Int> operator*(const Matrix& a, std::span<const Int> v);
// [a | b]; row counts must match.
Matrix hconcat(const Matrix& a, const Matrix& b);
// Block diagonal diag(a, b).
Matrix block_diagonal(const Matrix& a, const Matrix& b);

}  // namespace coincalc
