#pragma once

#include "toricnash/integer.hpp"

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace toricnash {

using IntVector = std::vector<Integer>;

/// Dense row-major matrix of exact integers. Columns are read as lattice
/// vectors (generators) throughout the library; rows as linear functionals.
class IntMatrix {
 public:
  IntMatrix() = default;  // 0 x 0 placeholder
  IntMatrix(std::size_t rows, std::size_t cols);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows);
  /// `rank` is the length of each column; it must be >= 1.
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rank);
  static IntMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows);
  /// Builds a matrix from a list of columns, e.g. {{1,0},{3,5}} is [[1,3],[0,5]].
  static IntMatrix from_columns(std::initializer_list<std::initializer_list<long long>> columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_vectors() const;
  std::vector<IntVector> column_vectors() const;
  const std::vector<Integer>& entries() const noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_column_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t r);
  void negate_column(std::size_t c);

  IntMatrix transpose() const;
  IntMatrix select_columns(const std::vector<std::size_t>& indices) const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntVector operator*(const IntMatrix& a, const IntVector& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
  /// Shape first, then row-major lexicographic order of the entries.
  friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Plain-text matrix format: one row per line, whitespace-separated entries,
/// blank lines and lines starting with '#' ignored.
IntMatrix parse_matrix(std::string_view text);
IntMatrix read_matrix_file(const std::string& path);
std::string format_matrix(const IntMatrix& m);

// Small vector helpers used across modules.
Integer dot(const IntVector& a, const IntVector& b);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector scaled(const IntVector& v, const Integer& factor);
bool is_zero_vector(const IntVector& v);
IntVector vector_of(std::initializer_list<long long> values);
std::string vector_to_string(const IntVector& v);

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept;
};

}  // namespace toricnash
