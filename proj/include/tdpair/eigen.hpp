#pragma once

#include <vector>

#include "tdpair/matrix.hpp"
#include "tdpair/subspace.hpp"

namespace tdpair {

/// Spectrum of a square matrix restricted to eigenvalues lying in its field.
struct EigenData {
  std::vector<FieldElement> eigenvalues;  // distinct, sorted by element order
  std::vector<std::size_t> multiplicities;  // geometric: eigenspace dimensions
  std::vector<Subspace> eigenspaces;
  bool diagonalizable = false;
};

EigenData eigen_data(const Matrix& m);

/// E_i = prod_{j != i} (M - theta_j I) / (theta_i - theta_j), in the order given.
/// Throws LinalgError on repeated eigenvalues or when the list is not the
/// full spectrum of a diagonalizable M.
std::vector<Matrix> primitive_idempotents(const Matrix& m, const std::vector<FieldElement>& eigenvalues);

/// The same product without any checks; used when M is known to satisfy the
/// split minimal polynomial.
std::vector<Matrix> lagrange_idempotents(const Matrix& m, const std::vector<FieldElement>& eigenvalues);

}  // namespace tdpair
