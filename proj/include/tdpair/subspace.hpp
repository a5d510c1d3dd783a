#pragma once

#include <vector>

#include "tdpair/matrix.hpp"

namespace tdpair {

/// A subspace of F^n stored by a canonical basis: the columns are the
/// transposed nonzero rows of the reduced row echelon form of any spanning
/// set, so equal subspaces compare equal by representation.
class Subspace {
 public:
  /// Span of the columns of `spanning` (dependent columns allowed).
  static Subspace span(const Matrix& spanning);
  static Subspace zero(const FieldDescriptor& fd, std::size_t ambient);
  static Subspace whole(const FieldDescriptor& fd, std::size_t ambient);

  const Matrix& basis() const { return basis_; }
  std::size_t dim() const { return basis_.cols(); }
  std::size_t ambient() const { return basis_.rows(); }
  const FieldDescriptor& field() const { return basis_.field(); }

  bool contains(const Matrix& vector) const;
  bool contains(const Subspace& other) const;
  /// m applied to the subspace.
  Subspace image(const Matrix& m) const;
  bool is_invariant_under(const Matrix& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}

  Matrix basis_;
};

enum class SubspaceOp { Sum, Intersect };

/// Sum or intersection of a nonempty list of subspaces of the same ambient space.
Subspace subspace_combine(const std::vector<Subspace>& parts, SubspaceOp op);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// True when the subspaces are independent (dims add up under the sum).
bool independent(const std::vector<Subspace>& parts);

}  // namespace tdpair
