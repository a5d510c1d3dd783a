#pragma once

#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "tdpair/bases.hpp"

namespace tdpair::testing {

inline FieldElement random_element(const FieldDescriptor& fd, std::mt19937_64& rng) {
  if (fd.is_rationals()) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 4);
    return FieldElement(mpq_class(num(rng), den(rng)));
  }
  std::uniform_int_distribution<long> r(0, static_cast<long>(fd.characteristic()) - 1);
  return FieldElement(fd, r(rng));
}

inline FieldElement random_nonzero(const FieldDescriptor& fd, std::mt19937_64& rng) {
  while (true) {
    FieldElement x = random_element(fd, rng);
    if (!x.is_zero()) return x;
  }
}

inline std::vector<FieldElement> random_distinct3(const FieldDescriptor& fd, std::mt19937_64& rng) {
  while (true) {
    std::vector<FieldElement> xs{random_element(fd, rng), random_element(fd, rng), random_element(fd, rng)};
    if (!(xs[0] == xs[1]) && !(xs[0] == xs[2]) && !(xs[1] == xs[2])) return xs;
  }
}

inline ParameterArray random_array(const FieldDescriptor& fd, std::mt19937_64& rng) {
  return ParameterArray{{random_element(fd, rng), random_element(fd, rng), random_element(fd, rng)},
                        {random_element(fd, rng), random_element(fd, rng), random_element(fd, rng)},
                        random_element(fd, rng),
                        random_element(fd, rng)};
}

inline ParameterArray random_admissible(const FieldDescriptor& fd, std::mt19937_64& rng) {
  while (true) {
    ParameterArray pa{random_distinct3(fd, rng), random_distinct3(fd, rng), random_nonzero(fd, rng),
                      random_nonzero(fd, rng)};
    if (admissible(pa).ok) return pa;
  }
}

/// Distinct eigenvalues, nonzero varphi and phi, and varphi = varphi1 varphi2.
/// With u = (phi - varphi) / D the boundary equation is solved by choosing u
/// and setting varphi = (u - a1)(u - a2), phi = varphi + u D.
inline ParameterArray random_boundary(const FieldDescriptor& fd, std::mt19937_64& rng) {
  while (true) {
    const auto t = random_distinct3(fd, rng);
    const auto s = random_distinct3(fd, rng);
    const FieldElement d = (t[0] - t[2]) * (s[0] - s[2]);
    const FieldElement a1 = (t[0] - t[1]) * (s[0] - s[1]);
    const FieldElement a2 = (t[1] - t[2]) * (s[1] - s[2]);
    const FieldElement u = random_element(fd, rng);
    const FieldElement varphi = (u - a1) * (u - a2);
    const FieldElement phi = varphi + u * d;
    if (varphi.is_zero() || phi.is_zero()) continue;
    return ParameterArray{t, s, varphi, phi};
  }
}

inline Matrix random_matrix(const FieldDescriptor& fd, std::mt19937_64& rng) {
  Matrix m(fd, 4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) m(i, j) = random_element(fd, rng);
  return m;
}

inline Matrix random_invertible(const FieldDescriptor& fd, std::mt19937_64& rng) {
  while (true) {
    Matrix m = random_matrix(fd, rng);
    if (rank(m) == 4) return m;
  }
}

/// Calls visit on every subspace of F_p^4 of dimension 1..3, built from all
/// reduced row echelon forms.
inline void for_each_proper_subspace(const FieldDescriptor& fd, const std::function<void(const Subspace&)>& visit) {
  const long p = static_cast<long>(fd.characteristic());
  for (unsigned mask = 1; mask < 15; ++mask) {
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < 4; ++c)
      if (mask >> c & 1) pivots.push_back(c);
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      for (std::size_t c = pivots[r] + 1; c < 4; ++c)
        if (!(mask >> c & 1)) free.emplace_back(r, c);
    long count = 1;
    for (std::size_t k = 0; k < free.size(); ++k) count *= p;
    for (long code = 0; code < count; ++code) {
      Matrix basis(fd, 4, pivots.size());
      for (std::size_t r = 0; r < pivots.size(); ++r) basis(pivots[r], r) = FieldElement::one(fd);
      long rest = code;
      for (const auto& [r, c] : free) {
        basis(c, r) = FieldElement(fd, rest % p);
        rest /= p;
      }
      visit(Subspace::span(basis));
    }
  }
}

/// Least dimension of a proper nonzero subspace invariant under both, by
/// testing every subspace.
inline std::optional<std::size_t> brute_force_invariant_dim(const Matrix& a, const Matrix& b) {
  std::optional<std::size_t> best;
  for_each_proper_subspace(a.field(), [&](const Subspace& w) {
    if (w.is_invariant_under(a) && w.is_invariant_under(b) && (!best || w.dim() < *best)) best = w.dim();
  });
  return best;
}

inline std::size_t subspace_count(long p) {
  std::size_t n = 0;
  for_each_proper_subspace(FieldDescriptor::prime(static_cast<std::uint64_t>(p)), [&](const Subspace&) { ++n; });
  return n;
}

/// Pairs for the invariant-subspace comparison: A = S D S^-1 with D diagonal,
/// B random or built to keep a chosen subspace invariant.
inline std::pair<Matrix, Matrix> random_pair(const FieldDescriptor& fd, std::mt19937_64& rng) {
  std::vector<FieldElement> d;
  for (int i = 0; i < 4; ++i) d.push_back(random_element(fd, rng));
  const Matrix s = random_invertible(fd, rng);
  const Matrix a = s * Matrix::diagonal(fd, d) * invert(s);
  Matrix b = random_matrix(fd, rng);
  std::uniform_int_distribution<int> kind(0, 2);
  if (kind(rng) == 0) {
    // B block triangular in the basis S: span of the first k columns of S is
    // invariant under both.
    std::uniform_int_distribution<std::size_t> kk(1, 3);
    const std::size_t k = kk(rng);
    Matrix inner = random_matrix(fd, rng);
    for (std::size_t i = k; i < 4; ++i)
      for (std::size_t j = 0; j < k; ++j) inner(i, j) = FieldElement::zero(fd);
    b = s * inner * invert(s);
  }
  return {a, b};
}

}  // namespace tdpair::testing
