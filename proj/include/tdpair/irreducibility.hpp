#pragma once

#include <optional>
#include <stdexcept>

#include "tdpair/subspace.hpp"

namespace tdpair {

/// Raised when the common-invariant-subspace search meets an eigenspace
/// configuration it cannot decide over the given field.
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InvariantSearch {
  bool irreducible = false;
  /// A common invariant subspace 0 != W != V of least dimension, if any.
  std::optional<Subspace> witness;
};

/// Searches for W with 0 != W != V, AW in W, BW in W. One of A, B must be
/// diagonalizable over the field.
///
/// W splits along the eigenspaces of the diagonalizable operator, so each
/// component is 0, a whole eigenspace or (for a plane) a line x u1 + y u2.
/// The line condition reduces to binary forms of degree <= 2 in (x : y),
/// solved exactly. Larger eigenspaces or several planes are handled by
/// walking every projective point, which needs a finite field.
InvariantSearch find_common_invariant_subspace(const Matrix& a, const Matrix& b);

/// Smallest subspace containing `start` and invariant under both matrices.
Subspace invariant_closure(const Subspace& start, const Matrix& a, const Matrix& b);

}  // namespace tdpair
