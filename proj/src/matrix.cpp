#include "tdpair/matrix.hpp"

#include <algorithm>
#include <string>

namespace tdpair {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw LinalgError(std::string(what) + ": shape mismatch");
  }
  if (!(a.field() == b.field())) throw LinalgError(std::string(what) + ": field mismatch");
}

}  // namespace

Matrix::Matrix(FieldDescriptor fd, std::size_t rows, std::size_t cols)
    : fd_(fd), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(fd)) {}

Matrix Matrix::identity(const FieldDescriptor& fd, std::size_t n) {
  Matrix m(fd, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(fd);
  return m;
}

Matrix Matrix::from_rows(const FieldDescriptor& fd, const std::vector<std::vector<FieldElement>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(fd, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw LinalgError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (!(rows[i][j].field() == fd)) throw LinalgError("matrix entry from a different field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_ints(const FieldDescriptor& fd, std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<FieldElement>> out;
  for (const auto& row : rows) {
    std::vector<FieldElement> r;
    for (long v : row) r.emplace_back(fd, v);
    out.push_back(std::move(r));
  }
  return from_rows(fd, out);
}

Matrix Matrix::column_vector(const FieldDescriptor& fd, const std::vector<FieldElement>& entries) {
  Matrix m(fd, entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

Matrix Matrix::diagonal(const FieldDescriptor& fd, const std::vector<FieldElement>& entries) {
  Matrix m(fd, entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix Matrix::from_columns(const FieldDescriptor& fd, std::size_t rows, const std::vector<Matrix>& columns) {
  Matrix m(fd, rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].rows() != rows || columns[j].cols() != 1) throw LinalgError("bad column vector");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j](i, 0);
  }
  return m;
}

Matrix Matrix::column(std::size_t j) const {
  Matrix c(fd_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
  return c;
}

Matrix Matrix::transpose() const {
  Matrix t(fd_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const FieldElement& x) { return x.is_zero(); });
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix sum");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "matrix difference");
  Matrix out = a;
  for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw LinalgError("matrix product: inner dimensions differ");
  if (!(a.fd_ == b.fd_)) throw LinalgError("matrix product: field mismatch");
  Matrix out(a.fd_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElement& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix operator*(const FieldElement& c, const Matrix& a) {
  Matrix out = a;
  for (auto& x : out.data_) x = c * x;
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.fd_ == b.fd_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix hcat(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw LinalgError("hcat: row counts differ");
  Matrix out(left.field(), left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) out(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) out(i, left.cols() + j) = right(i, j);
  }
  return out;
}

Matrix shift(const Matrix& m, const FieldElement& c) {
  if (!m.is_square()) throw LinalgError("shift of a non-square matrix");
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, i) -= c;
  return out;
}

RowEchelon row_reduce(const Matrix& m) {
  Matrix r = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < r.rows() && r(pivot, col).is_zero()) ++pivot;
    if (pivot == r.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < r.cols(); ++j) std::swap(r(pivot, j), r(row, j));
    }
    const FieldElement inv = r(row, col).inverse();
    for (std::size_t j = col; j < r.cols(); ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col).is_zero()) continue;
      const FieldElement f = r(i, col);
      for (std::size_t j = col; j < r.cols(); ++j) r(i, j) -= f * r(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
  const auto [r, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix v(m.field(), m.cols(), 1);
    v(free, 0) = FieldElement::one(m.field());
    for (std::size_t k = 0; k < pivots.size(); ++k) v(pivots[k], 0) = -r(k, free);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(m.field(), m.cols(), basis);
}

FieldElement determinant(const Matrix& m) {
  if (!m.is_square()) throw LinalgError("determinant of a non-square matrix");
  Matrix r = m;
  FieldElement det = FieldElement::one(m.field());
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && r(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return FieldElement::zero(m.field());
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(r(pivot, j), r(col, j));
      det = -det;
    }
    det *= r(col, col);
    const FieldElement inv = r(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (r(i, col).is_zero()) continue;
      const FieldElement f = r(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) r(i, j) -= f * r(col, j);
    }
  }
  return det;
}

Matrix invert(const Matrix& m) {
  if (!m.is_square()) throw LinalgError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const auto [r, pivots] = row_reduce(hcat(m, Matrix::identity(m.field(), n)));
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw LinalgError("matrix is singular");
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
  return inv;
}

Polynomial characteristic_polynomial(const Matrix& m) {
  if (!m.is_square()) throw LinalgError("characteristic polynomial of a non-square matrix");
  // Coefficient of x^(n-k) is (-1)^k times the sum of the k x k principal minors.
  const std::size_t n = m.rows();
  const FieldDescriptor& fd = m.field();
  std::vector<FieldElement> coeffs(n + 1, FieldElement::zero(fd));
  coeffs[n] = FieldElement::one(fd);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    Matrix minor(fd, idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) minor(a, b) = m(idx[a], idx[b]);
    const FieldElement d = determinant(minor);
    const std::size_t k = idx.size();
    coeffs[n - k] += (k % 2 == 0) ? d : -d;
  }
  return Polynomial(fd, std::move(coeffs));
}

}  // namespace tdpair
