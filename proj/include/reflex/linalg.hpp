#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace reflex {

/// Dense row-major matrix of 64-bit integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<std::int64_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<std::int64_t>& flat() const { return data_; }

  IntMatrix transposed() const;
  IntMatrix without_row(std::size_t r) const;

  std::string to_string() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
  friend std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free elimination; throws on overflow.
std::int64_t determinant(const IntMatrix& m);

/// Column Hermite normal form: unimodular column operations bring the matrix
/// to lower echelon form with positive pivots and every entry left of a pivot
/// reduced into [0, pivot). Unique for the column-equivalence class.
IntMatrix column_hermite_form(IntMatrix m);

/// Index in Z^cols of the lattice spanned by the rows (0 if not full rank),
/// read off the product of Hermite pivots.
std::int64_t row_lattice_index(const IntMatrix& m);

}  // namespace reflex
