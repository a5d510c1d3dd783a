#include "tdpair/bases.hpp"

namespace tdpair {

namespace {

void require_nonzero(const Matrix& v, const char* name) {
  if (v.is_zero()) throw LinalgError(std::string(name) + " vanishes");
}

// Named scalars of a parameter array for the closed-form tables.
struct Scalars {
  FieldDescriptor fd;
  FieldElement zero, one;
  FieldElement t0, t1, t2, s0, s1, s2, vp, ph;
  FieldElement vp1, vp2, ph1, ph2;

  explicit Scalars(const ParameterArray& pa)
      : fd(pa.field()),
        zero(FieldElement::zero(fd)),
        one(FieldElement::one(fd)),
        t0(pa.theta[0]), t1(pa.theta[1]), t2(pa.theta[2]),
        s0(pa.thetastar[0]), s1(pa.thetastar[1]), s2(pa.thetastar[2]),
        vp(pa.varphi), ph(pa.phi),
        vp1(zero), vp2(zero), ph1(zero), ph2(zero) {
    const DerivedParams dp = derived_params(pa);
    vp1 = dp.varphi1;
    vp2 = dp.varphi2;
    ph1 = dp.phi1;
    ph2 = dp.phi2;
  }

  Matrix mat(const std::vector<std::vector<FieldElement>>& rows) const { return Matrix::from_rows(fd, rows); }
  Matrix diag(const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d) const {
    return Matrix::diagonal(fd, {a, b, c, d});
  }
};

FieldElement sq(const FieldElement& x) { return x * x; }

void require_admissible(const ParameterArray& pa) {
  if (!admissible(pa).ok) throw ParameterError("closed forms need an admissible parameter array");
}

}  // namespace

std::string to_string(BasisId id) {
  switch (id) {
    case BasisId::SplitZD: return "SplitZD";
    case BasisId::SplitZZ: return "SplitZZ";
    case BasisId::SplitDZ: return "SplitDZ";
    case BasisId::SplitDD: return "SplitDD";
    case BasisId::EigA: return "EigA";
    case BasisId::EigAstar: return "EigAstar";
  }
  throw std::invalid_argument("unknown basis id");
}

std::optional<BasisId> basis_from_string(const std::string& name) {
  for (BasisId id : kAllBases)
    if (to_string(id) == name) return id;
  return std::nullopt;
}

std::string to_string(Operator op) { return op == Operator::A ? "A" : "Astar"; }

Matrix canonical_seed(const TDSystem& tds) {
  const Matrix& e = tds.Estar[0];
  for (std::size_t j = 0; j < e.cols(); ++j) {
    Matrix v = e.column(j);
    if (v.is_zero()) continue;
    std::size_t k = 0;
    while (v(k, 0).is_zero()) ++k;
    return v(k, 0).inverse() * v;
  }
  throw LinalgError("E*_0 is zero");
}

EtaVectors eta_vectors(const TDSystem& tds, const Matrix& seed) {
  require_nonzero(seed, "seed");
  if (!(tds.Estar[0] * seed == seed)) throw LinalgError("seed is not in E*_0 V");
  const auto& t = tds.theta;
  const auto& s = tds.thetastar;
  EtaVectors eta{seed, shift(tds.A, t[1]) * shift(tds.A, t[2]) * seed,
                 shift(tds.A, t[1]) * shift(tds.A, t[0]) * seed, seed};
  eta.eta2star = shift(tds.Astar, s[1]) * shift(tds.Astar, s[0]) * eta.eta2;
  require_nonzero(eta.eta0, "eta_0");
  require_nonzero(eta.eta2, "eta_2");
  require_nonzero(eta.eta2star, "eta*_2");
  return eta;
}

EtaVectors eta_vectors(const TDSystem& tds) { return eta_vectors(tds, canonical_seed(tds)); }

Matrix basis_matrix(const TDSystem& tds, BasisId id, const EtaVectors& eta) {
  const FieldDescriptor& fd = tds.A.field();
  const auto& t = tds.theta;
  const auto& s = tds.thetastar;
  const Matrix& a = tds.A;
  const Matrix& as = tds.Astar;
  std::vector<Matrix> cols;
  switch (id) {
    case BasisId::SplitZD:
      cols = {eta.eta0star, shift(a, t[0]) * eta.eta0star, shift(as, s[2]) * eta.eta2, eta.eta2};
      break;
    case BasisId::SplitZZ:
      cols = {eta.eta0star, shift(a, t[2]) * eta.eta0star, shift(as, s[2]) * eta.eta0, eta.eta0};
      break;
    case BasisId::SplitDZ: {
      const FieldElement varphi = extract_parameter_array(tds).varphi;
      cols = {eta.eta2star, shift(a, t[2]) * eta.eta2star, varphi * (shift(as, s[0]) * eta.eta0), varphi * eta.eta0};
      break;
    }
    case BasisId::SplitDD: {
      const FieldElement phi = extract_parameter_array(tds).phi;
      cols = {eta.eta2star, shift(a, t[0]) * eta.eta2star, phi * (shift(as, s[0]) * eta.eta2), phi * eta.eta2};
      break;
    }
    case BasisId::EigA:
      cols = {eta.eta0, tds.E[1] * eta.eta0star, tds.E[1] * eta.eta2star, eta.eta2};
      break;
    case BasisId::EigAstar:
      cols = {eta.eta0star, tds.Estar[1] * eta.eta0, tds.Estar[1] * eta.eta2, eta.eta2star};
      break;
  }
  Matrix b = Matrix::from_columns(fd, a.rows(), cols);
  if (rank(b) != b.rows()) throw LinalgError("basis " + to_string(id) + " is singular");
  return b;
}

Matrix represent(const TDSystem& tds, Operator which, BasisId id, const EtaVectors& eta) {
  const Matrix b = basis_matrix(tds, id, eta);
  return invert(b) * (which == Operator::A ? tds.A : tds.Astar) * b;
}

Matrix transition_numeric(const TDSystem& tds, BasisId from, BasisId to, const EtaVectors& eta) {
  return invert(basis_matrix(tds, from, eta)) * basis_matrix(tds, to, eta);
}

Matrix represent_formula(const ParameterArray& pa, Operator which, BasisId id) {
  require_admissible(pa);
  const Scalars x(pa);
  const auto& [fd, zero, one, t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2] = x;
  auto mat = [&](const std::vector<std::vector<FieldElement>>& rows) { return x.mat(rows); };
  auto diag = [&](const FieldElement& a, const FieldElement& b, const FieldElement& c, const FieldElement& d) {
    return x.diag(a, b, c, d);
  };
  using enum Operator;
  if (which == A && id == BasisId::SplitZD) return mat({
      {t0, zero, zero, zero},
      {one, t1, zero, zero},
      {zero, zero, t1, zero},
      {zero, one, vp2, t2}});
  if (which == Astar && id == BasisId::SplitZD) return mat({
      {s0, vp1, vp, zero},
      {zero, s1, zero, zero},
      {zero, zero, s1, one},
      {zero, zero, zero, s2}});
  if (which == A && id == BasisId::SplitZZ) return mat({
      {t2, zero, zero, zero},
      {one, t1, zero, zero},
      {zero, zero, t1, zero},
      {zero, one, ph2, t0}});
  if (which == Astar && id == BasisId::SplitZZ) return mat({
      {s0, ph1, ph, zero},
      {zero, s1, zero, zero},
      {zero, zero, s1, one},
      {zero, zero, zero, s2}});
  if (which == A && id == BasisId::SplitDZ) return mat({
      {t2, zero, zero, zero},
      {one, t1, zero, zero},
      {zero, zero, t1, zero},
      {zero, one, vp1, t0}});
  if (which == Astar && id == BasisId::SplitDZ) return mat({
      {s2, vp2, vp, zero},
      {zero, s1, zero, zero},
      {zero, zero, s1, one},
      {zero, zero, zero, s0}});
  if (which == A && id == BasisId::SplitDD) return mat({
      {t0, zero, zero, zero},
      {one, t1, zero, zero},
      {zero, zero, t1, zero},
      {zero, one, ph1, t2}});
  if (which == Astar && id == BasisId::SplitDD) return mat({
      {s2, ph2, ph, zero},
      {zero, s1, zero, zero},
      {zero, zero, s1, one},
      {zero, zero, zero, s0}});
  if (which == A && id == BasisId::EigA) return diag(t0, t1, t1, t2);
  if (which == Astar && id == BasisId::EigA) return mat({
      {s0 + vp1 / (t0 - t1), vp1 / (sq(t0 - t1) * (t2 - t0)), vp * ph2 / (sq(t0 - t1) * (t2 - t0)), zero},
      {ph / (s0 - s2), s1 + (vp + vp1 * (t1 - t2) * (s0 - s2)) / ((t1 - t0) * (t1 - t2) * (s0 - s2)), vp * ph / ((t1 - t0) * (t1 - t2) * (s0 - s2)), vp / (s0 - s2)},
      {one / (s2 - s0), one / ((t1 - t0) * (t1 - t2) * (s2 - s0)), s1 + (vp + vp2 * (t1 - t0) * (s2 - s0)) / ((t1 - t0) * (t1 - t2) * (s2 - s0)), one / (s2 - s0)},
      {zero, ph1 / (sq(t1 - t2) * (t0 - t2)), ph * vp2 / (sq(t1 - t2) * (t0 - t2)), s2 + vp2 / (t2 - t1)}});
  if (which == A && id == BasisId::EigAstar) return mat({
      {t0 + vp1 / (s0 - s1), ph * vp1 / (sq(s0 - s1) * (s2 - s0)), vp * ph1 / (sq(s0 - s1) * (s2 - s0)), zero},
      {one / (t0 - t2), t1 + (vp + vp1 * (t0 - t2) * (s1 - s2)) / ((t0 - t2) * (s1 - s0) * (s1 - s2)), vp / ((t0 - t2) * (s1 - s0) * (s1 - s2)), vp / (t0 - t2)},
      {one / (t2 - t0), ph / ((t2 - t0) * (s1 - s0) * (s1 - s2)), t1 + (vp + vp2 * (t0 - t2) * (s0 - s1)) / ((t2 - t0) * (s1 - s0) * (s1 - s2)), ph / (t2 - t0)},
      {zero, ph2 / (sq(s1 - s2) * (s0 - s2)), vp2 / (sq(s1 - s2) * (s0 - s2)), t2 + vp2 / (s2 - s1)}});
  if (which == Astar && id == BasisId::EigAstar) return diag(s0, s1, s1, s2);
  throw std::invalid_argument("unknown representation");
}

Matrix transition_formula(const ParameterArray& pa, BasisId from, BasisId to) {
  require_admissible(pa);
  if (from == to) return Matrix::identity(pa.field(), 4);
  const Scalars x(pa);
  const auto& [fd, zero, one, t0, t1, t2, s0, s1, s2, vp, ph, vp1, vp2, ph1, ph2] = x;
  auto mat = [&](const std::vector<std::vector<FieldElement>>& rows) { return x.mat(rows); };
  if (from == BasisId::SplitZD && to == BasisId::SplitZZ) return mat({
      {one, t0 - t2, (t0 - t2) * ph2, (t0 - t2) * (t0 - t1)},
      {zero, one, (t0 - t2) * (s1 - s2), t0 - t2},
      {zero, zero, one, zero},
      {zero, zero, zero, one}});
  if (from == BasisId::SplitZZ && to == BasisId::SplitZD) return mat({
      {one, t2 - t0, (t2 - t0) * vp2, (t2 - t0) * (t2 - t1)},
      {zero, one, (t2 - t0) * (s1 - s2), t2 - t0},
      {zero, zero, one, zero},
      {zero, zero, zero, one}});
  if (from == BasisId::SplitZZ && to == BasisId::SplitDZ) return mat({
      {ph, zero, zero, zero},
      {zero, ph, zero, zero},
      {s2 - s0, (s2 - s0) * (t1 - t2), vp, zero},
      {(s2 - s0) * (s2 - s1), (s2 - s0) * vp2, (s2 - s0) * vp, vp}});
  if (from == BasisId::SplitDZ && to == BasisId::SplitZZ) return mat({
      {one / ph, zero, zero, zero},
      {zero, one / ph, zero, zero},
      {(s0 - s2) / (vp * ph), (s0 - s2) * (t1 - t2) / (vp * ph), one / vp, zero},
      {(s0 - s2) * (s0 - s1) / (vp * ph), (s0 - s2) * ph1 / (vp * ph), (s0 - s2) / vp, one / vp}});
  if (from == BasisId::SplitDZ && to == BasisId::SplitDD) return mat({
      {one, t2 - t0, (t2 - t0) * ph1, (t2 - t0) * (t2 - t1)},
      {zero, one, (t2 - t0) * (s1 - s0), t2 - t0},
      {zero, zero, one, zero},
      {zero, zero, zero, one}});
  if (from == BasisId::SplitDD && to == BasisId::SplitDZ) return mat({
      {one, t0 - t2, (t0 - t2) * vp1, (t0 - t2) * (t0 - t1)},
      {zero, one, (t0 - t2) * (s1 - s0), t0 - t2},
      {zero, zero, one, zero},
      {zero, zero, zero, one}});
  if (from == BasisId::SplitDD && to == BasisId::SplitZD) return mat({
      {one / vp, zero, zero, zero},
      {zero, one / vp, zero, zero},
      {(s0 - s2) / (vp * ph), (s0 - s2) * (t1 - t0) / (vp * ph), one / ph, zero},
      {(s0 - s2) * (s0 - s1) / (vp * ph), (s0 - s2) * vp1 / (vp * ph), (s0 - s2) / ph, one / ph}});
  if (from == BasisId::SplitZD && to == BasisId::SplitDD) return mat({
      {vp, zero, zero, zero},
      {zero, vp, zero, zero},
      {s2 - s0, (s2 - s0) * (t1 - t0), ph, zero},
      {(s2 - s0) * (s2 - s1), (s2 - s0) * ph2, (s2 - s0) * ph, ph}});
  if (from == BasisId::SplitZD && to == BasisId::SplitDZ) return mat({
      {vp, (t0 - t2) * vp, (t0 - t2) * vp * vp1, (t0 - t2) * (t0 - t1) * vp},
      {zero, vp, (t0 - t2) * (s1 - s0) * vp, (t0 - t2) * vp},
      {s2 - s0, (s2 - s0) * (t1 - t2), vp, zero},
      {(s2 - s0) * (s2 - s1), (s2 - s0) * vp2, (s2 - s0) * vp, vp}});
  if (from == BasisId::SplitDZ && to == BasisId::SplitZD) return mat({
      {one / ph, (t2 - t0) / ph, (t2 - t0) * vp2 / ph, (t2 - t0) * (t2 - t1) / ph},
      {zero, one / ph, (t2 - t0) * (s1 - s2) / ph, (t2 - t0) / ph},
      {(s0 - s2) / (vp * ph), (s0 - s2) * (t1 - t0) / (vp * ph), one / ph, zero},
      {(s0 - s2) * (s0 - s1) / (vp * ph), (s0 - s2) * vp1 / (vp * ph), (s0 - s2) / ph, one / ph}});
  if (from == BasisId::SplitZZ && to == BasisId::SplitDD) return mat({
      {ph, (t2 - t0) * ph, (t2 - t0) * ph * ph1, (t2 - t0) * (t2 - t1) * ph},
      {zero, ph, (t2 - t0) * (s1 - s0) * ph, (t2 - t0) * ph},
      {s2 - s0, (s2 - s0) * (t1 - t0), ph, zero},
      {(s2 - s0) * (s2 - s1), (s2 - s0) * ph2, (s2 - s0) * ph, ph}});
  if (from == BasisId::SplitDD && to == BasisId::SplitZZ) return mat({
      {one / vp, (t0 - t2) / vp, (t0 - t2) * ph2 / vp, (t0 - t2) * (t0 - t1) / vp},
      {zero, one / vp, (t0 - t2) * (s1 - s2) / vp, (t0 - t2) / vp},
      {(s0 - s2) / (vp * ph), (s0 - s2) * (t1 - t2) / (vp * ph), one / vp, zero},
      {(s0 - s2) * (s0 - s1) / (vp * ph), (s0 - s2) * ph1 / (vp * ph), (s0 - s2) / vp, one / vp}});
  const FieldElement d01 = (t1 - t0) * (t1 - t2);
  if (from == BasisId::SplitZD && to == BasisId::EigA) return mat({
      {(t0 - t1) * (t0 - t2), zero, zero, zero},
      {t0 - t2, one / (t1 - t0), vp / (t1 - t0), zero},
      {zero, zero, s2 - s0, zero},
      {one, one / d01, (vp + vp2 * (t1 - t0) * (s2 - s0)) / d01, one}});
  if (from == BasisId::EigA && to == BasisId::SplitZD) return mat({
      {one / ((t0 - t1) * (t0 - t2)), zero, zero, zero},
      {one, t1 - t0, vp / (s0 - s2), zero},
      {zero, zero, one / (s2 - s0), zero},
      {one / ((t2 - t0) * (t2 - t1)), one / (t2 - t1), vp2 / (t2 - t1), one}});
  if (from == BasisId::SplitZZ && to == BasisId::EigA) return mat({
      {zero, zero, zero, (t2 - t0) * (t2 - t1)},
      {zero, one / (t1 - t2), ph / (t1 - t2), t2 - t0},
      {zero, zero, s2 - s0, zero},
      {one, one / d01, (ph + ph2 * (t1 - t2) * (s2 - s0)) / d01, one}});
  if (from == BasisId::EigA && to == BasisId::SplitZZ) return mat({
      {one / ((t0 - t1) * (t0 - t2)), one / (t0 - t1), ph2 / (t0 - t1), one},
      {one, t1 - t2, ph / (s0 - s2), zero},
      {zero, zero, one / (s2 - s0), zero},
      {one / ((t2 - t0) * (t2 - t1)), zero, zero, zero}});
  if (from == BasisId::SplitDZ && to == BasisId::EigA) return mat({
      {zero, zero, zero, (t2 - t0) * (t2 - t1) / ph},
      {zero, one / ((t1 - t2) * ph), one / (t1 - t2), (t2 - t0) / ph},
      {zero, (s0 - s2) / (vp * ph), zero, zero},
      {one / vp, (ph + ph1 * (t1 - t0) * (s0 - s2)) / (d01 * vp * ph), one / d01, one / ph}});
  if (from == BasisId::EigA && to == BasisId::SplitDZ) return mat({
      {vp / ((t0 - t1) * (t0 - t2)), vp / (t0 - t1), vp * vp1 / (t0 - t1), vp},
      {zero, zero, vp * ph / (s0 - s2), zero},
      {one, t1 - t2, vp / (s2 - s0), zero},
      {ph / ((t0 - t2) * (t1 - t2)), zero, zero, zero}});
  if (from == BasisId::SplitDD && to == BasisId::EigA) return mat({
      {(t0 - t1) * (t0 - t2) / vp, zero, zero, zero},
      {(t0 - t2) / vp, one / (vp * (t1 - t0)), one / (t1 - t0), zero},
      {zero, (s0 - s2) / (vp * ph), zero, zero},
      {one / vp, (vp + vp1 * (t1 - t2) * (s0 - s2)) / (d01 * vp * ph), one / d01, one / ph}});
  if (from == BasisId::EigA && to == BasisId::SplitDD) return mat({
      {vp / ((t0 - t1) * (t0 - t2)), zero, zero, zero},
      {zero, zero, vp * ph / (s0 - s2), zero},
      {one, t1 - t0, ph / (s2 - s0), zero},
      {ph / ((t0 - t2) * (t1 - t2)), ph / (t2 - t1), ph * ph1 / (t2 - t1), ph}});
  const FieldElement ds = (s1 - s0) * (s1 - s2);
  if (from == BasisId::SplitZD && to == BasisId::EigAstar) return mat({
      {one, (ph + ph2 * (t0 - t2) * (s1 - s0)) / ds, vp / ds, vp},
      {zero, t0 - t2, zero, zero},
      {zero, one / (s1 - s2), one / (s1 - s2), s2 - s0},
      {zero, zero, zero, (s2 - s0) * (s2 - s1)}});
  if (from == BasisId::EigAstar && to == BasisId::SplitZD) return mat({
      {one, vp1 / (s0 - s1), vp / (s0 - s1), vp / ((s0 - s1) * (s0 - s2))},
      {zero, one / (t0 - t2), zero, zero},
      {zero, one / (t2 - t0), s1 - s2, one},
      {zero, zero, zero, one / ((s0 - s2) * (s1 - s2))}});
  if (from == BasisId::SplitZZ && to == BasisId::EigAstar) return mat({
      {one, ph / ds, (vp + vp2 * (t0 - t2) * (s0 - s1)) / ds, ph},
      {zero, zero, t2 - t0, zero},
      {zero, one / (s1 - s2), one / (s1 - s2), s2 - s0},
      {zero, zero, zero, (s2 - s0) * (s2 - s1)}});
  if (from == BasisId::EigAstar && to == BasisId::SplitZZ) return mat({
      {one, ph1 / (s0 - s1), ph / (s0 - s1), ph / ((s0 - s1) * (s0 - s2))},
      {zero, one / (t0 - t2), s1 - s2, one},
      {zero, one / (t2 - t0), zero, zero},
      {zero, zero, zero, one / ((s0 - s2) * (s1 - s2))}});
  if (from == BasisId::SplitDZ && to == BasisId::EigAstar) return mat({
      {one / ph, one / ds, (vp + vp2 * (t0 - t2) * (s0 - s1)) / (ds * ph), one},
      {zero, zero, (t2 - t0) / ph, zero},
      {(s0 - s2) / (vp * ph), one / (vp * (s1 - s0)), one / (ph * (s1 - s0)), zero},
      {(s0 - s2) * (s0 - s1) / (vp * ph), zero, zero, zero}});
  if (from == BasisId::EigAstar && to == BasisId::SplitDZ) return mat({
      {zero, zero, zero, vp * ph / ((s0 - s1) * (s0 - s2))},
      {zero, vp / (t0 - t2), (s1 - s0) * vp, vp},
      {zero, ph / (t2 - t0), zero, zero},
      {one, vp2 / (s2 - s1), vp / (s2 - s1), vp / ((s2 - s1) * (s2 - s0))}});
  if (from == BasisId::SplitDD && to == BasisId::EigAstar) return mat({
      {one / vp, (vp + vp1 * (t0 - t2) * (s1 - s2)) / (ds * vp), one / ds, one},
      {zero, (t0 - t2) / vp, zero, zero},
      {(s0 - s2) / (vp * ph), one / (vp * (s1 - s0)), one / (ph * (s1 - s0)), zero},
      {(s0 - s2) * (s0 - s1) / (vp * ph), zero, zero, zero}});
  if (from == BasisId::EigAstar && to == BasisId::SplitDD) return mat({
      {zero, zero, zero, vp * ph / ((s1 - s0) * (s2 - s0))},
      {zero, vp / (t0 - t2), zero, zero},
      {zero, ph / (t2 - t0), (s1 - s0) * ph, ph},
      {one, ph2 / (s2 - s1), ph / (s2 - s1), ph / ((s2 - s1) * (s2 - s0))}});
  const FieldElement q0 = (t0 - t1) * (t0 - t2);
  const FieldElement q2 = (t0 - t2) * (t1 - t2);
  if (from == BasisId::EigA && to == BasisId::EigAstar) return mat({
      {one / q0, (ph + ph2 * (t0 - t2) * (s1 - s0)) / (q0 * ds), vp / (q0 * ds), vp / q0},
      {one, ph / ((s0 - s2) * (s1 - s0)), vp / ((s0 - s2) * (s1 - s0)), zero},
      {zero, one / ((s2 - s1) * (s0 - s2)), one / ((s2 - s1) * (s0 - s2)), one},
      {one / q2, ph / (q2 * ds), (vp + vp2 * (t0 - t2) * (s0 - s1)) / (q2 * ds), ph / q2}});
  const FieldElement qs0 = (s0 - s1) * (s0 - s2);
  if (from == BasisId::EigAstar && to == BasisId::EigA) return mat({
      {ph / qs0, (vp + vp1 * (t1 - t2) * (s0 - s2)) / (d01 * qs0), vp * ph / (d01 * qs0), vp / qs0},
      {one, one / ((t1 - t0) * (t0 - t2)), vp / ((t1 - t0) * (t0 - t2)), zero},
      {zero, one / ((t2 - t1) * (t0 - t2)), ph / ((t2 - t1) * (t0 - t2)), one},
      {one / ((s1 - s2) * (s0 - s2)), one / (d01 * (s0 - s2) * (s1 - s2)), (vp + vp2 * (t1 - t0) * (s2 - s0)) / (d01 * (s0 - s2) * (s1 - s2)), one / ((s0 - s2) * (s1 - s2))}});
  throw std::invalid_argument("unknown transition");
}

}  // namespace tdpair
