#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace oabkit {

using Integer = mpz_class;

// Row vectors act on matrices from the right: x |-> x * M.
using RowVector = std::vector<Integer>;

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix Identity(std::size_t n);
  static IntMatrix Zero(std::size_t rows, std::size_t cols) {
    return IntMatrix(rows, cols);
  }
  static IntMatrix FromRows(const std::vector<RowVector>& rows,
                            std::size_t cols);
  // 2x2 block matrix [[tl, tr], [bl, br]].
  static IntMatrix FromBlocks(const IntMatrix& tl, const IntMatrix& tr,
                              const IntMatrix& bl, const IntMatrix& br);
  static IntMatrix BlockDiagonal(const IntMatrix& a, const IntMatrix& b);
  static IntMatrix Diagonal(std::span<const Integer> diagonal);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  RowVector row(std::size_t i) const;
  RowVector column(std::size_t j) const;
  void set_row(std::size_t i, std::span<const Integer> values);
  IntMatrix transpose() const;
  // Columns [first, first + count).
  IntMatrix column_block(std::size_t first, std::size_t count) const;
  IntMatrix row_block(std::size_t first, std::size_t count) const;
  IntMatrix abs() const;

  bool is_zero() const;
  bool is_nonnegative() const;

  // Row operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_columns(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source,
                        const Integer& factor);
  void add_column_multiple(std::size_t target, std::size_t source,
                           const Integer& factor);
  void negate_row(std::size_t i);

  IntMatrix& operator+=(const IntMatrix& other);
  IntMatrix& operator-=(const IntMatrix& other);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
    return a += b;
  }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
    return a -= b;
  }
  friend IntMatrix operator-(const IntMatrix& a);
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Integer& scalar, const IntMatrix& m);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string ToString() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// x * M for a row vector x of length M.rows().
RowVector Multiply(std::span<const Integer> x, const IntMatrix& m);
RowVector Add(std::span<const Integer> a, std::span<const Integer> b);
RowVector Subtract(std::span<const Integer> a, std::span<const Integer> b);
RowVector Scale(const Integer& factor, std::span<const Integer> x);
RowVector ZeroVector(std::size_t n);
RowVector UnitVector(std::size_t n, std::size_t i);
bool IsZero(std::span<const Integer> x);
RowVector MakeVector(std::initializer_list<long> values);
std::string ToString(std::span<const Integer> x);

}  // namespace oabkit
