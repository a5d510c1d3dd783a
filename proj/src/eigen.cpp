#include "tdpair/eigen.hpp"

#include <algorithm>

namespace tdpair {

EigenData eigen_data(const Matrix& m) {
  if (!m.is_square()) throw LinalgError("eigen_data of a non-square matrix");
  EigenData out;
  out.eigenvalues = roots_in_field(characteristic_polynomial(m));
  std::size_t total = 0;
  Matrix min_poly_value = Matrix::identity(m.field(), m.rows());
  for (const auto& theta : out.eigenvalues) {
    const Matrix shifted = shift(m, theta);
    Subspace space = Subspace::span(kernel(shifted));
    total += space.dim();
    out.multiplicities.push_back(space.dim());
    out.eigenspaces.push_back(std::move(space));
    min_poly_value = min_poly_value * shifted;
  }
  // Both conditions are equivalent; checking the product keeps the
  // minimal-polynomial criterion explicit.
  out.diagonalizable = total == m.rows() && min_poly_value.is_zero();
  return out;
}

std::vector<Matrix> lagrange_idempotents(const Matrix& m, const std::vector<FieldElement>& eigenvalues) {
  std::vector<Matrix> out;
  const FieldDescriptor& fd = m.field();
  for (std::size_t i = 0; i < eigenvalues.size(); ++i) {
    Matrix e = Matrix::identity(fd, m.rows());
    for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
      if (j == i) continue;
      e = ((eigenvalues[i] - eigenvalues[j]).inverse()) * (e * shift(m, eigenvalues[j]));
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<Matrix> primitive_idempotents(const Matrix& m, const std::vector<FieldElement>& eigenvalues) {
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
      if (eigenvalues[i] == eigenvalues[j]) throw LinalgError("repeated eigenvalue " + eigenvalues[i].to_string());
  const EigenData data = eigen_data(m);
  if (!data.diagonalizable) throw LinalgError("matrix is not diagonalizable over " + m.field().name());
  auto sorted = eigenvalues;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != data.eigenvalues) throw LinalgError("eigenvalue list does not match the spectrum");
  return lagrange_idempotents(m, eigenvalues);
}

}  // namespace tdpair
