#include "tdpair/irreducibility.hpp"

#include <functional>

#include "tdpair/eigen.hpp"

namespace tdpair {

namespace {

// Coefficients c_k of x^k y^(deg - k).
struct BinaryForm {
  int degree;
  std::vector<FieldElement> coeffs;
};

Matrix annihilator(const Subspace& s) {
  if (s.dim() == 0) return Matrix::identity(s.field(), s.ambient());
  return kernel(s.basis().transpose()).transpose();
}

bool better(const std::optional<Subspace>& best, const Subspace& candidate) {
  return !best || candidate.dim() < best->dim();
}

// The line in `plane` that together with `fixed` spans a B-invariant space.
std::optional<Matrix> invariant_line(const Subspace& fixed, const Subspace& plane, const Matrix& b) {
  const FieldDescriptor& fd = b.field();
  const Matrix n = annihilator(fixed);
  const Matrix u1 = plane.basis().column(0), u2 = plane.basis().column(1);
  const Matrix na = n * u1, nb = n * u2;
  const Matrix nba = n * b * u1, nbb = n * b * u2;
  const std::size_t m = n.rows();

  std::vector<BinaryForm> forms;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = 0; k < fixed.dim(); ++k) {
        const Matrix c = n * b * fixed.basis().column(k);
        forms.push_back({1, {nb(i, 0) * c(j, 0) - nb(j, 0) * c(i, 0), na(i, 0) * c(j, 0) - na(j, 0) * c(i, 0)}});
      }
      forms.push_back({2,
                       {nb(i, 0) * nbb(j, 0) - nb(j, 0) * nbb(i, 0),
                        na(i, 0) * nbb(j, 0) + nb(i, 0) * nba(j, 0) - na(j, 0) * nbb(i, 0) - nb(j, 0) * nba(i, 0),
                        na(i, 0) * nba(j, 0) - na(j, 0) * nba(i, 0)}});
    }
  }

  bool at_infinity = true;
  Polynomial common(fd);
  for (const auto& f : forms) {
    if (!f.coeffs.back().is_zero()) at_infinity = false;
    common = gcd(common, Polynomial(fd, f.coeffs));
  }
  if (at_infinity) return u1;
  if (common.is_zero() || common.degree() == 0) return std::nullopt;
  const auto roots = roots_in_field(common);
  if (roots.empty()) return std::nullopt;
  return roots.front() * u1 + u2;
}

void for_each_projective_point(const Subspace& s, const std::function<void(const Matrix&)>& visit) {
  const FieldDescriptor& fd = s.field();
  const std::uint64_t p = fd.characteristic();
  const std::size_t k = s.dim();
  // Normalized coordinate vectors: leading nonzero entry 1.
  for (std::size_t lead = 0; lead < k; ++lead) {
    std::size_t tail = k - lead - 1;
    std::uint64_t count = 1;
    for (std::size_t t = 0; t < tail; ++t) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Matrix v = s.basis().column(lead);
      std::uint64_t rest = code;
      for (std::size_t t = 0; t < tail; ++t) {
        v = v + FieldElement(fd, static_cast<long>(rest % p)) * s.basis().column(lead + 1 + t);
        rest /= p;
      }
      visit(v);
    }
  }
}

InvariantSearch by_lines(const EigenData& data, const Matrix& a, const Matrix& b) {
  std::optional<Subspace> best;
  for (const auto& space : data.eigenspaces) {
    for_each_projective_point(space, [&](const Matrix& v) {
      const Subspace w = invariant_closure(Subspace::span(v), a, b);
      if (w.dim() < a.rows() && better(best, w)) best = w;
    });
  }
  return {!best, best};
}

InvariantSearch by_forms(const EigenData& data, const Matrix& b, std::size_t n) {
  const FieldDescriptor& fd = b.field();
  std::size_t plane = data.eigenspaces.size();
  std::vector<std::size_t> lines;
  for (std::size_t i = 0; i < data.eigenspaces.size(); ++i) {
    if (data.multiplicities[i] == 2) plane = i;
    else lines.push_back(i);
  }
  std::optional<Subspace> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << lines.size()); ++mask) {
    Subspace fixed = Subspace::zero(fd, n);
    for (std::size_t t = 0; t < lines.size(); ++t)
      if (mask >> t & 1) fixed = sum(fixed, data.eigenspaces[lines[t]]);
    std::vector<Subspace> candidates{fixed};
    if (plane < data.eigenspaces.size()) candidates.push_back(sum(fixed, data.eigenspaces[plane]));
    for (const auto& w : candidates) {
      if (w.dim() == 0 || w.dim() == n) continue;
      if (w.is_invariant_under(b) && better(best, w)) best = w;
    }
    if (plane < data.eigenspaces.size()) {
      if (auto v = invariant_line(fixed, data.eigenspaces[plane], b)) {
        Subspace w = sum(fixed, Subspace::span(*v));
        if (!w.is_invariant_under(b)) throw std::logic_error("invariant line check disagrees with direct test");
        if (better(best, w)) best = w;
      }
    }
  }
  return {!best, best};
}

bool forms_apply(const EigenData& data) {
  std::size_t planes = 0;
  for (std::size_t d : data.multiplicities) {
    if (d > 2) return false;
    if (d == 2) ++planes;
  }
  return planes <= 1;
}

}  // namespace

Subspace invariant_closure(const Subspace& start, const Matrix& a, const Matrix& b) {
  Subspace w = start;
  while (true) {
    Subspace next = sum(w, sum(w.image(a), w.image(b)));
    if (next.dim() == w.dim()) return w;
    w = std::move(next);
  }
}

InvariantSearch find_common_invariant_subspace(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows() || !(a.field() == b.field()))
    throw LinalgError("invariant subspace search needs two square matrices of one size over one field");
  const EigenData da = eigen_data(a);
  const EigenData db = eigen_data(b);
  if (da.diagonalizable && forms_apply(da)) return by_forms(da, b, a.rows());
  if (db.diagonalizable && forms_apply(db)) return by_forms(db, a, a.rows());
  if (!da.diagonalizable && !db.diagonalizable)
    throw UnsupportedError("neither matrix is diagonalizable over " + a.field().name());
  if (!a.field().is_finite())
    throw UnsupportedError("eigenspace configuration needs a finite field for the line search");
  return da.diagonalizable ? by_lines(da, a, b) : by_lines(db, b, a);
}

}  // namespace tdpair
