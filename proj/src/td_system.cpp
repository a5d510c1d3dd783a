#include "tdpair/td_system.hpp"

#include <algorithm>
#include <stdexcept>

#include "tdpair/irreducibility.hpp"

namespace tdpair {

namespace {

constexpr std::size_t kDim = 4;
constexpr std::size_t kDiameter = 2;

const char* const kSkipped = "skipped";

std::string list_text(const std::vector<FieldElement>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + xs[i].to_string();
  return out + ")";
}

AxiomCheck pass() { return {true, ""}; }
AxiomCheck fail(std::string reason) { return {false, std::move(reason)}; }

AxiomCheck check_spectrum(const Matrix& m, const std::vector<FieldElement>& listed, const char* name) {
  const EigenData data = eigen_data(m);
  if (!data.diagonalizable) return fail(std::string(name) + " is not diagonalizable over " + m.field().name());
  if (data.eigenvalues.size() != kDiameter + 1)
    return fail(std::string(name) + " has " + std::to_string(data.eigenvalues.size()) + " eigenvalues " +
                list_text(data.eigenvalues) + "; three are required");
  auto sorted = listed;
  std::sort(sorted.begin(), sorted.end());
  if (listed.size() != kDiameter + 1 || sorted != data.eigenvalues)
    return fail(std::string(name) + " has eigenvalues " + list_text(data.eigenvalues) + " but the list is " +
                list_text(listed));
  return pass();
}

std::string idempotent_failure(const Matrix& m, const std::vector<FieldElement>& thetas, const std::vector<Matrix>& e) {
  const FieldDescriptor& fd = m.field();
  Matrix total(fd, kDim, kDim);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i].is_zero()) return "idempotent " + std::to_string(i) + " is zero";
    if (!(m * e[i] == thetas[i] * e[i])) return "idempotent " + std::to_string(i) + " is not on its eigenvalue";
    for (std::size_t j = 0; j < e.size(); ++j)
      if (!(e[i] * e[j] == (i == j ? e[i] : Matrix(fd, kDim, kDim))))
        return "idempotents " + std::to_string(i) + ", " + std::to_string(j) + " are not orthogonal projections";
    total = total + e[i];
  }
  if (!(total == Matrix::identity(fd, kDim))) return "idempotents do not sum to the identity";
  return "";
}

// Indices (i, j) with |i - j| > 1 reduce to (0, 2) and (2, 0).
bool tridiagonal(const std::vector<Matrix>& e, const Matrix& other) {
  return (e[0] * other * e[2]).is_zero() && (e[2] * other * e[0]).is_zero();
}

void require_shape(const Matrix& m, const FieldDescriptor& fd) {
  if (m.rows() != kDim || m.cols() != kDim) throw LinalgError("expected a 4x4 matrix");
  if (!(m.field() == fd)) throw LinalgError("matrices over different fields");
}

void require_field(const std::vector<FieldElement>& xs, const FieldDescriptor& fd) {
  for (const auto& x : xs)
    if (!(x.field() == fd)) throw LinalgError("eigenvalue list over a different field");
}

Subspace column_space(const Matrix& m) { return Subspace::span(m); }

Subspace span_range(const std::vector<Matrix>& e, std::size_t lo, std::size_t hi) {
  Subspace s = Subspace::zero(e[0].field(), kDim);
  for (std::size_t k = lo; k <= hi; ++k) s = sum(s, column_space(e[k]));
  return s;
}

}  // namespace

std::string to_string(SplitDecompositionId id) {
  switch (id) {
    case SplitDecompositionId::ZstarD: return "ZstarD";
    case SplitDecompositionId::ZstarZ: return "ZstarZ";
    case SplitDecompositionId::DstarZ: return "DstarZ";
    case SplitDecompositionId::DstarD: return "DstarD";
    case SplitDecompositionId::ZD: return "ZD";
    case SplitDecompositionId::ZstarDstar: return "ZstarDstar";
  }
  throw std::invalid_argument("unknown decomposition id");
}

VerificationReport verify_td_system(const Matrix& A, const Matrix& Astar, const std::vector<FieldElement>& theta,
                                    const std::vector<FieldElement>& thetastar) {
  const FieldDescriptor& fd = A.field();
  require_shape(A, fd);
  require_shape(Astar, fd);
  require_field(theta, fd);
  require_field(thetastar, fd);

  VerificationReport r;
  const AxiomCheck skipped = fail(kSkipped);
  r.orderings = r.tridiagonal_AstarE = r.tridiagonal_AEstar = r.irreducible = skipped;

  r.diagonalizable_A = check_spectrum(A, theta, "A");
  r.diagonalizable_Astar = check_spectrum(Astar, thetastar, "A*");
  if (!r.diagonalizable_A.ok || !r.diagonalizable_Astar.ok) return r;

  TDSystem tds{A, Astar, theta, thetastar, lagrange_idempotents(A, theta), lagrange_idempotents(Astar, thetastar)};
  if (auto why = idempotent_failure(A, theta, tds.E); !why.empty()) {
    r.orderings = fail("A: " + why);
    return r;
  }
  if (auto why = idempotent_failure(Astar, thetastar, tds.Estar); !why.empty()) {
    r.orderings = fail("A*: " + why);
    return r;
  }
  r.orderings = pass();
  r.system = tds;

  r.tridiagonal_AstarE = tridiagonal(tds.E, Astar) ? pass() : fail("E_i A* E_j != 0 for some |i - j| > 1");
  r.tridiagonal_AEstar = tridiagonal(tds.Estar, A) ? pass() : fail("E*_i A E*_j != 0 for some |i - j| > 1");
  if (!r.tridiagonal_AstarE.ok || !r.tridiagonal_AEstar.ok) return r;

  try {
    const InvariantSearch search = find_common_invariant_subspace(A, Astar);
    if (search.irreducible) {
      r.irreducible = pass();
    } else {
      r.irreducible = fail("common invariant subspace of dimension " + std::to_string(search.witness->dim()));
      r.witness = search.witness;
    }
  } catch (const UnsupportedError& e) {
    r.irreducible = fail(std::string("undecided: ") + e.what());
  }
  if (!r.irreducible.ok) return r;

  r.overall = true;
  const auto rho = shape(tds);
  r.shape.assign(rho.begin(), rho.end());
  return r;
}

TDSystem make_td_system(const Matrix& A, const Matrix& Astar, const std::vector<FieldElement>& theta,
                        const std::vector<FieldElement>& thetastar) {
  VerificationReport r = verify_td_system(A, Astar, theta, thetastar);
  if (!r.overall) {
    for (const AxiomCheck* c : {&r.diagonalizable_A, &r.diagonalizable_Astar, &r.orderings, &r.tridiagonal_AstarE,
                                &r.tridiagonal_AEstar, &r.irreducible})
      if (!c->ok) throw LinalgError("not a TD system: " + c->reason);
  }
  return *r.system;
}

std::vector<Ordering> find_td_orderings(const Matrix& A, const Matrix& Astar) {
  const FieldDescriptor& fd = A.field();
  require_shape(A, fd);
  require_shape(Astar, fd);
  const EigenData da = eigen_data(A), ds = eigen_data(Astar);
  if (!da.diagonalizable || !ds.diagonalizable || da.eigenvalues.size() != kDiameter + 1 ||
      ds.eigenvalues.size() != kDiameter + 1)
    throw LinalgError("orderings need two diagonalizable matrices with three eigenvalues each");

  auto all_orders = [](std::vector<FieldElement> xs, const Matrix& m) {
    std::vector<std::pair<std::vector<FieldElement>, std::vector<Matrix>>> out;
    do out.emplace_back(xs, lagrange_idempotents(m, xs));
    while (std::next_permutation(xs.begin(), xs.end()));
    return out;
  };
  const auto orders_a = all_orders(da.eigenvalues, A);
  const auto orders_s = all_orders(ds.eigenvalues, Astar);

  std::vector<Ordering> out;
  for (const auto& [ta, ea] : orders_a) {
    if (!tridiagonal(ea, Astar)) continue;
    for (const auto& [ts, es] : orders_s)
      if (tridiagonal(es, A)) out.emplace_back(ta, ts);
  }
  return out;
}

std::vector<Subspace> split_decomposition(const TDSystem& tds, SplitDecompositionId id) {
  const std::size_t d = kDiameter;
  std::vector<Subspace> u;
  for (std::size_t i = 0; i <= d; ++i) {
    switch (id) {
      case SplitDecompositionId::ZstarD:
        u.push_back(intersect(span_range(tds.Estar, 0, i), span_range(tds.E, i, d)));
        break;
      case SplitDecompositionId::ZstarZ:
        u.push_back(intersect(span_range(tds.Estar, 0, i), span_range(tds.E, 0, d - i)));
        break;
      case SplitDecompositionId::DstarZ:
        u.push_back(intersect(span_range(tds.Estar, d - i, d), span_range(tds.E, 0, d - i)));
        break;
      case SplitDecompositionId::DstarD:
        u.push_back(intersect(span_range(tds.Estar, d - i, d), span_range(tds.E, i, d)));
        break;
      case SplitDecompositionId::ZD:
        u.push_back(column_space(tds.E[i]));
        break;
      case SplitDecompositionId::ZstarDstar:
        u.push_back(column_space(tds.Estar[i]));
        break;
    }
  }
  std::size_t total = 0;
  for (const auto& s : u) {
    if (s.dim() == 0) throw LinalgError("decomposition " + to_string(id) + " has a zero component");
    total += s.dim();
  }
  if (total != kDim || !independent(u)) throw LinalgError("decomposition " + to_string(id) + " does not split V");
  return u;
}

std::array<std::size_t, 3> shape(const TDSystem& tds) {
  std::optional<std::array<std::size_t, 3>> rho;
  for (auto id : kAllDecompositions) {
    const auto u = split_decomposition(tds, id);
    const std::array<std::size_t, 3> dims{u[0].dim(), u[1].dim(), u[2].dim()};
    if (rho && *rho != dims) throw std::logic_error("decomposition " + to_string(id) + " has a different shape");
    rho = dims;
  }
  return *rho;
}

bool verify_split_actions(const TDSystem& tds) {
  const std::size_t d = kDiameter;
  const FieldDescriptor& fd = tds.A.field();
  const Subspace zero = Subspace::zero(fd, kDim);
  for (auto id : kAllDecompositions) {
    std::vector<Subspace> u;
    try {
      u = split_decomposition(tds, id);
    } catch (const LinalgError&) {
      return false;
    }
    auto at = [&](long i) { return i < 0 || i > static_cast<long>(d) ? zero : u[static_cast<std::size_t>(i)]; };
    for (std::size_t i = 0; i <= d; ++i) {
      const long li = static_cast<long>(i);
      const Subspace& ui = u[i];
      const Subspace around = sum(at(li - 1), sum(ui, at(li + 1)));
      bool ok = true;
      switch (id) {
        case SplitDecompositionId::ZstarD:
          ok = at(li + 1).contains(ui.image(shift(tds.A, tds.theta[i]))) &&
               at(li - 1).contains(ui.image(shift(tds.Astar, tds.thetastar[i])));
          break;
        case SplitDecompositionId::ZstarZ:
          ok = at(li + 1).contains(ui.image(shift(tds.A, tds.theta[d - i]))) &&
               at(li - 1).contains(ui.image(shift(tds.Astar, tds.thetastar[i])));
          break;
        case SplitDecompositionId::DstarZ:
          ok = at(li + 1).contains(ui.image(shift(tds.A, tds.theta[d - i]))) &&
               at(li - 1).contains(ui.image(shift(tds.Astar, tds.thetastar[d - i])));
          break;
        case SplitDecompositionId::DstarD:
          ok = at(li + 1).contains(ui.image(shift(tds.A, tds.theta[i]))) &&
               at(li - 1).contains(ui.image(shift(tds.Astar, tds.thetastar[d - i])));
          break;
        case SplitDecompositionId::ZD:
          ok = ui.image(shift(tds.A, tds.theta[i])).dim() == 0 && around.contains(ui.image(tds.Astar));
          break;
        case SplitDecompositionId::ZstarDstar:
          ok = around.contains(ui.image(tds.A)) && ui.image(shift(tds.Astar, tds.thetastar[i])).dim() == 0;
          break;
      }
      if (!ok) return false;
    }
  }
  return true;
}

}  // namespace tdpair
