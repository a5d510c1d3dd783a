#include "tdpair/shape121.hpp"

#include <optional>

namespace tdpair {

namespace {

void require_denominators(const ParameterArray& pa) {
  if (pa.theta[0] == pa.theta[2] || pa.thetastar[0] == pa.thetastar[2])
    throw ParameterError("derived parameters need theta_0 != theta_2 and theta*_0 != theta*_2");
}

bool distinct(const std::vector<FieldElement>& xs) {
  return !(xs[0] == xs[1]) && !(xs[0] == xs[2]) && !(xs[1] == xs[2]);
}

std::vector<FieldElement> reversed(const std::vector<FieldElement>& xs) { return {xs.rbegin(), xs.rend()}; }

// Scalar c with m v = c v, if any.
std::optional<FieldElement> eigen_scalar(const Matrix& m, const Matrix& v) {
  const Matrix image = m * v;
  std::size_t k = 0;
  while (v(k, 0).is_zero()) ++k;
  const FieldElement c = image(k, 0) / v(k, 0);
  if (!(image == c * v)) return std::nullopt;
  return c;
}

Matrix line_vector(const Matrix& idempotent, const char* name) {
  const Subspace s = Subspace::span(idempotent);
  if (s.dim() != 1) throw ParameterError(std::string(name) + " V is not one-dimensional");
  return s.basis().column(0);
}

}  // namespace

void validate(const ParameterArray& pa) {
  if (pa.theta.size() != 3 || pa.thetastar.size() != 3)
    throw ParameterError("eigenvalue sequences need exactly three entries");
  const FieldDescriptor& fd = pa.field();
  if (!(pa.phi.field() == fd)) throw ParameterError("parameter array mixes fields");
  for (const auto& x : pa.theta)
    if (!(x.field() == fd)) throw ParameterError("parameter array mixes fields");
  for (const auto& x : pa.thetastar)
    if (!(x.field() == fd)) throw ParameterError("parameter array mixes fields");
}

DerivedParams derived_params(const ParameterArray& pa) {
  validate(pa);
  require_denominators(pa);
  const auto& t = pa.theta;
  const auto& s = pa.thetastar;
  const FieldElement a = (pa.phi - pa.varphi) / ((t[0] - t[2]) * (s[0] - s[2]));
  const FieldElement b = (pa.varphi - pa.phi) / ((t[2] - t[0]) * (s[0] - s[2]));
  return DerivedParams{
      a - (t[0] - t[1]) * (s[0] - s[1]),
      a - (t[1] - t[2]) * (s[1] - s[2]),
      b - (t[2] - t[1]) * (s[0] - s[1]),
      b - (t[1] - t[0]) * (s[1] - s[2]),
  };
}

AdmissibilityReport admissible(const ParameterArray& pa) {
  validate(pa);
  AdmissibilityReport r;
  if (!distinct(pa.theta) || !distinct(pa.thetastar)) r.failed.push_back("(i)");
  if (pa.varphi.is_zero() || pa.phi.is_zero()) r.failed.push_back("(ii)");
  if (!(pa.theta[0] == pa.theta[2]) && !(pa.thetastar[0] == pa.thetastar[2])) {
    const DerivedParams dp = derived_params(pa);
    if (pa.varphi == dp.varphi1 * dp.varphi2) r.failed.push_back("(iii)");
  }
  r.ok = r.failed.empty();
  return r;
}

std::pair<Matrix, Matrix> canonical_matrices(const ParameterArray& pa) {
  const DerivedParams dp = derived_params(pa);
  const FieldDescriptor& fd = pa.field();
  const auto& t = pa.theta;
  const auto& s = pa.thetastar;
  Matrix a = Matrix::diagonal(fd, {t[0], t[1], t[1], t[2]});
  a(1, 0) = FieldElement::one(fd);
  a(3, 1) = FieldElement::one(fd);
  a(3, 2) = dp.varphi2;
  Matrix as = Matrix::diagonal(fd, {s[0], s[1], s[1], s[2]});
  as(0, 1) = dp.varphi1;
  as(0, 2) = pa.varphi;
  as(2, 3) = FieldElement::one(fd);
  return {a, as};
}

TDSystem construct(const ParameterArray& pa) {
  const AdmissibilityReport r = admissible(pa);
  if (!r.ok) {
    std::string ids;
    for (const auto& f : r.failed) ids += (ids.empty() ? "" : " ") + f;
    throw ParameterError("parameter array is not admissible: " + ids);
  }
  auto [a, as] = canonical_matrices(pa);
  auto e = lagrange_idempotents(a, pa.theta);
  auto es = lagrange_idempotents(as, pa.thetastar);
  return TDSystem{std::move(a), std::move(as), pa.theta, pa.thetastar, std::move(e), std::move(es)};
}

ParameterArray extract_parameter_array(const TDSystem& tds) {
  const auto& t = tds.theta;
  const auto& s = tds.thetastar;
  const Matrix& a = tds.A;
  const Matrix& as = tds.Astar;
  const Matrix head = shift(as, s[1]) * shift(as, s[2]) * shift(a, t[1]);
  const Matrix to_varphi = head * shift(a, t[0]);
  const Matrix to_phi = head * shift(a, t[2]);

  const Matrix v = line_vector(tds.Estar[0], "E*_0");
  const auto varphi = eigen_scalar(to_varphi, v);
  const auto phi = eigen_scalar(to_phi, v);
  if (!varphi || !phi) throw ParameterError("quartic products do not act as scalars on E*_0 V");
  if (varphi->is_zero() || phi->is_zero()) throw ParameterError("split eigenvalue is zero");

  const Matrix u = line_vector(tds.E[0], "E_0");
  const Matrix tail = shift(a, t[1]) * shift(a, t[2]) * shift(as, s[1]);
  const auto phi_on_e0 = eigen_scalar(tail * shift(as, s[2]), u);
  const auto varphi_on_e0 = eigen_scalar(tail * shift(as, s[0]), u);
  if (!phi_on_e0 || !varphi_on_e0 || !(*phi_on_e0 == *phi) || !(*varphi_on_e0 == *varphi))
    throw ParameterError("split eigenvalues read on E_0 V disagree with E*_0 V");
  return ParameterArray{tds.theta, tds.thetastar, *varphi, *phi};
}

D4Element D4Element::reduce(const D4Word& word) {
  D4Element g;
  for (D4Letter letter : word) {
    switch (letter) {
      case D4Letter::Star: g.star = !g.star; break;
      case D4Letter::Down: (g.star ? g.double_down : g.down) ^= true; break;
      case D4Letter::DoubleDown: (g.star ? g.down : g.double_down) ^= true; break;
    }
  }
  return g;
}

D4Word D4Element::word() const {
  D4Word w;
  if (down) w.push_back(D4Letter::Down);
  if (double_down) w.push_back(D4Letter::DoubleDown);
  if (star) w.push_back(D4Letter::Star);
  return w;
}

std::array<D4Element, 8> d4_elements() {
  std::array<D4Element, 8> out;
  for (int k = 0; k < 8; ++k) out[k] = D4Element{bool(k & 1), bool(k & 2), bool(k & 4)};
  return out;
}

std::string to_string(const D4Word& word) {
  std::string out;
  for (D4Letter letter : word) {
    switch (letter) {
      case D4Letter::Star: out += "*"; break;
      case D4Letter::Down: out += "down"; break;
      case D4Letter::DoubleDown: out += "Down"; break;
    }
  }
  return out.empty() ? "1" : out;
}

ParameterArray apply_letter(const ParameterArray& pa, D4Letter letter) {
  switch (letter) {
    case D4Letter::Star: return {pa.thetastar, pa.theta, pa.varphi, pa.phi};
    case D4Letter::Down: return {pa.theta, reversed(pa.thetastar), pa.phi, pa.varphi};
    case D4Letter::DoubleDown: return {reversed(pa.theta), pa.thetastar, pa.phi, pa.varphi};
  }
  throw std::invalid_argument("unknown D4 letter");
}

ParameterArray relative(const ParameterArray& pa, const D4Element& g) {
  ParameterArray out = pa;
  for (D4Letter letter : g.word()) out = apply_letter(out, letter);
  return out;
}

ParameterArray relative(const ParameterArray& pa, const D4Word& word) { return relative(pa, D4Element::reduce(word)); }

DerivedParams permute_derived(const DerivedParams& dp, const D4Element& g) {
  DerivedParams out = dp;
  for (D4Letter letter : g.word()) {
    const DerivedParams d = out;
    switch (letter) {
      case D4Letter::Star: out = {d.varphi1, d.varphi2, d.phi2, d.phi1}; break;
      case D4Letter::Down: out = {d.phi2, d.phi1, d.varphi2, d.varphi1}; break;
      case D4Letter::DoubleDown: out = {d.phi1, d.phi2, d.varphi1, d.varphi2}; break;
    }
  }
  return out;
}

bool derived_of_relative_consistency(const ParameterArray& pa) {
  const DerivedParams base = derived_params(pa);
  for (const auto& g : d4_elements())
    if (!(derived_params(relative(pa, g)) == permute_derived(base, g))) return false;
  return true;
}

}  // namespace tdpair
