#include "tdpair/subspace.hpp"

namespace tdpair {

Subspace Subspace::span(const Matrix& spanning) {
  const auto [r, pivots] = row_reduce(spanning.transpose());
  Matrix basis(spanning.field(), spanning.rows(), pivots.size());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    for (std::size_t i = 0; i < spanning.rows(); ++i) basis(i, k) = r(k, i);
  return Subspace(std::move(basis));
}

Subspace Subspace::zero(const FieldDescriptor& fd, std::size_t ambient) {
  return Subspace(Matrix(fd, ambient, 0));
}

Subspace Subspace::whole(const FieldDescriptor& fd, std::size_t ambient) {
  return Subspace(Matrix::identity(fd, ambient));
}

bool Subspace::contains(const Matrix& vector) const {
  return rank(hcat(basis_, vector)) == dim();
}

bool Subspace::contains(const Subspace& other) const { return contains(other.basis_); }

Subspace Subspace::image(const Matrix& m) const { return span(m * basis_); }

bool Subspace::is_invariant_under(const Matrix& m) const { return contains(m * basis_); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (!(a.field() == b.field()) || a.ambient() != b.ambient()) {
    throw LinalgError("subspace sum: mixed fields or ambient spaces");
  }
  return Subspace::span(hcat(a.basis(), b.basis()));
}

// Zassenhaus: row reduce [[U, U], [W, 0]]; rows whose left half vanishes
// carry a basis of U n W in their right half.
Subspace intersect(const Subspace& a, const Subspace& b) {
  if (!(a.field() == b.field()) || a.ambient() != b.ambient()) {
    throw LinalgError("subspace intersection: mixed fields or ambient spaces");
  }
  const std::size_t n = a.ambient();
  const FieldDescriptor& fd = a.field();
  Matrix block(fd, a.dim() + b.dim(), 2 * n);
  for (std::size_t k = 0; k < a.dim(); ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      block(k, i) = a.basis()(i, k);
      block(k, n + i) = a.basis()(i, k);
    }
  }
  for (std::size_t k = 0; k < b.dim(); ++k)
    for (std::size_t i = 0; i < n; ++i) block(a.dim() + k, i) = b.basis()(i, k);
  const auto [r, pivots] = row_reduce(block);
  std::vector<Matrix> vectors;
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] < n) continue;
    Matrix v(fd, n, 1);
    for (std::size_t i = 0; i < n; ++i) v(i, 0) = r(k, n + i);
    vectors.push_back(std::move(v));
  }
  return Subspace::span(Matrix::from_columns(fd, n, vectors));
}

Subspace subspace_combine(const std::vector<Subspace>& parts, SubspaceOp op) {
  if (parts.empty()) throw LinalgError("subspace_combine needs at least one subspace");
  Subspace acc = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    acc = op == SubspaceOp::Sum ? sum(acc, parts[k]) : intersect(acc, parts[k]);
  }
  return acc;
}

bool independent(const std::vector<Subspace>& parts) {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.dim();
  return subspace_combine(parts, SubspaceOp::Sum).dim() == total;
}

}  // namespace tdpair
