#include "oabkit/int_matrix.h"

#include <sstream>

#include "oabkit/errors.h"

namespace oabkit {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : row) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::Identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::FromRows(const std::vector<RowVector>& rows,
                              std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

IntMatrix IntMatrix::FromBlocks(const IntMatrix& tl, const IntMatrix& tr,
                                const IntMatrix& bl, const IntMatrix& br) {
  if (tl.rows() != tr.rows() || bl.rows() != br.rows() ||
      tl.cols() != bl.cols() || tr.cols() != br.cols()) {
    throw DimensionError("incompatible block shapes");
  }
  IntMatrix m(tl.rows() + bl.rows(), tl.cols() + tr.cols());
  auto place = [&m](const IntMatrix& b, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
  };
  place(tl, 0, 0);
  place(tr, 0, tl.cols());
  place(bl, tl.rows(), 0);
  place(br, tl.rows(), tl.cols());
  return m;
}

IntMatrix IntMatrix::BlockDiagonal(const IntMatrix& a, const IntMatrix& b) {
  return FromBlocks(a, IntMatrix(a.rows(), b.cols()),
                    IntMatrix(b.rows(), a.cols()), b);
}

IntMatrix IntMatrix::Diagonal(std::span<const Integer> diagonal) {
  IntMatrix m(diagonal.size(), diagonal.size());
  for (std::size_t i = 0; i < diagonal.size(); ++i) m(i, i) = diagonal[i];
  return m;
}

RowVector IntMatrix::row(std::size_t i) const {
  return RowVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

RowVector IntMatrix::column(std::size_t j) const {
  RowVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

void IntMatrix::set_row(std::size_t i, std::span<const Integer> values) {
  if (values.size() != cols_) throw DimensionError("row length mismatch");
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = values[j];
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::column_block(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw DimensionError("column block out of range");
  IntMatrix b(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) b(i, j) = (*this)(i, first + j);
  return b;
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
  if (first + count > rows_) throw DimensionError("row block out of range");
  IntMatrix b(count, cols_);
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(first + i, j);
  return b;
}

IntMatrix IntMatrix::abs() const {
  IntMatrix a = *this;
  for (auto& v : a.data_) v = ::abs(v);
  return a;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_nonnegative() const {
  for (const auto& v : data_)
    if (v < 0) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_columns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t target, std::size_t source,
                                 const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    (*this)(target, j) += factor * (*this)(source, j);
}

void IntMatrix::add_column_multiple(std::size_t target, std::size_t source,
                                    const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    (*this)(i, target) += factor * (*this)(i, source);
}

void IntMatrix::negate_row(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionError("matrix sum shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw DimensionError("matrix difference shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

IntMatrix operator-(const IntMatrix& a) {
  IntMatrix n = a;
  for (auto& v : n.data_) v = -v;
  return n;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator*(const Integer& scalar, const IntMatrix& m) {
  IntMatrix r = m;
  for (auto& v : r.data_) v *= scalar;
  return r;
}

std::string IntMatrix::ToString() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << oabkit::ToString(row(i));
  }
  os << ']';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  return os << m.ToString();
}

RowVector Multiply(std::span<const Integer> x, const IntMatrix& m) {
  if (x.size() != m.rows()) throw DimensionError("vector-matrix shape mismatch");
  RowVector y(m.cols(), Integer(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] += x[i] * m(i, j);
  }
  return y;
}

RowVector Add(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  RowVector c(a.begin(), a.end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
  return c;
}

RowVector Subtract(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
  RowVector c(a.begin(), a.end());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
  return c;
}

RowVector Scale(const Integer& factor, std::span<const Integer> x) {
  RowVector y(x.begin(), x.end());
  for (auto& v : y) v *= factor;
  return y;
}

RowVector ZeroVector(std::size_t n) { return RowVector(n, Integer(0)); }

RowVector UnitVector(std::size_t n, std::size_t i) {
  RowVector e = ZeroVector(n);
  e.at(i) = 1;
  return e;
}

bool IsZero(std::span<const Integer> x) {
  for (const auto& v : x)
    if (v != 0) return false;
  return true;
}

RowVector MakeVector(std::initializer_list<long> values) {
  RowVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

std::string ToString(std::span<const Integer> x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ", ";
    s += x[i].get_str();
  }
  return s + ")";
}

}  // namespace oabkit
