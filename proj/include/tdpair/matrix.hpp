#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "tdpair/field.hpp"
#include "tdpair/polynomial.hpp"

namespace tdpair {

class LinalgError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense matrix over an exact field. Column vectors are n x 1 matrices.
/// Every entry belongs to the matrix's field.
class Matrix {
 public:
  Matrix(FieldDescriptor fd, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldDescriptor& fd, std::size_t n);
  static Matrix from_rows(const FieldDescriptor& fd, const std::vector<std::vector<FieldElement>>& rows);
  /// Convenience for tests and literals: integer entries.
  static Matrix from_ints(const FieldDescriptor& fd, std::initializer_list<std::initializer_list<long>> rows);
  static Matrix column_vector(const FieldDescriptor& fd, const std::vector<FieldElement>& entries);
  static Matrix diagonal(const FieldDescriptor& fd, const std::vector<FieldElement>& entries);
  /// Columns placed side by side; all must share the row count.
  static Matrix from_columns(const FieldDescriptor& fd, std::size_t rows, const std::vector<Matrix>& columns);

  const FieldDescriptor& field() const { return fd_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  Matrix column(std::size_t j) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const FieldElement& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldDescriptor fd_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

Matrix hcat(const Matrix& left, const Matrix& right);

/// M - c I
Matrix shift(const Matrix& m, const FieldElement& c);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon row_reduce(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0} as the columns of the result (cols may be 0).
Matrix kernel(const Matrix& m);
FieldElement determinant(const Matrix& m);
/// Throws LinalgError when m is singular or not square.
Matrix invert(const Matrix& m);
/// det(x I - m), monic of degree n.
Polynomial characteristic_polynomial(const Matrix& m);

}  // namespace tdpair
